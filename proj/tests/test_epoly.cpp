#include "stringy/epoly.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace stringy;

namespace {

// Numeric evaluation at real u, v; fractional exponents are fine for u, v > 0.
double evaluate(const MotivicClass& e, double u, double v) {
  double s = 0;
  for (const auto& [pq, c] : e.terms())
    s += static_cast<double>(c) * std::pow(u, static_cast<double>(pq.p)) * std::pow(v, static_cast<double>(pq.q));
  return s;
}

MotivicClass random_class(std::mt19937& rng, bool fractional) {
  std::uniform_int_distribution<int> nterms(0, 4), coeff(-5, 5), num(0, 6), den(1, fractional ? 3 : 1);
  MotivicClass out;
  for (int i = nterms(rng); i > 0; --i)
    out += MotivicClass::term(coeff(rng), Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  return out;
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Epoly, CanonicalRendering) {
  EXPECT_EQ(MotivicClass{}.render(), "0");
  EXPECT_EQ(MotivicClass::one().render(), "1");
  EXPECT_EQ(MotivicClass::projective_space(2).render(), "1 + 1*(uv)^1 + 1*(uv)^2");
  EXPECT_EQ((MotivicClass::term(3, 1, 0) + MotivicClass::term(-2, 0, 2)).render(), "-2*(u^0)*(v^2) + 3*(u^1)*(v^0)");
  EXPECT_EQ(MotivicClass::tate_power(Rational(2, 3)).render(), "1*(uv)^2/3");
}

TEST(Epoly, ZeroCoefficientsDisappear) {
  auto a = MotivicClass::tate() + MotivicClass::one();
  auto d = a - MotivicClass::tate();
  EXPECT_EQ(d, MotivicClass::one());
  EXPECT_EQ(d.terms().size(), 1u);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Epoly, TorusClassMatchesBinomialExpansion) {
  for (int k = 0; k <= 8; ++k) {
    auto t = torus_class(static_cast<std::uint64_t>(k));
    for (int j = 0; j <= k; ++j) {
      std::int64_t expected = binomial(k, j) * ((k - j) % 2 ? -1 : 1);
      EXPECT_EQ(t.coefficient(j, j), BigInt(expected)) << "k=" << k << " j=" << j;
    }
    EXPECT_EQ(t.euler_characteristic(), k == 0 ? 1 : 0);
  }
}

TEST(Epoly, ProjectiveSpaceDecomposesIntoCells) {
  for (int d = 0; d <= 6; ++d) {
    MotivicClass cells;
    for (int j = 0; j <= d; ++j) cells += MotivicClass::tate().pow(static_cast<std::uint64_t>(j));
    EXPECT_EQ(MotivicClass::projective_space(d), cells);
    EXPECT_EQ(MotivicClass::projective_space(d).euler_characteristic(), d + 1);
  }
}

TEST(Epoly, EulerCharacteristicIsEvaluationAtOne) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto a = random_class(rng, true);
    EXPECT_DOUBLE_EQ(static_cast<double>(a.euler_characteristic()), evaluate(a, 1, 1));
  }
  // A_4 resolution: (uv)^2 + 4uv
  auto a4 = MotivicClass::tate().pow(2) + MotivicClass::term(4, 1, 1);
  EXPECT_EQ(a4.euler_characteristic(), 5);
}

TEST(Epoly, RingLawsOnRandomClasses) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 150; ++i) {
    auto a = random_class(rng, true), b = random_class(rng, true), c = random_class(rng, true);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * MotivicClass::one(), a);
    EXPECT_TRUE((a * MotivicClass{}).is_zero());
  }
}

TEST(Epoly, ProductAgreesWithNumericEvaluation) {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    auto a = random_class(rng, true), b = random_class(rng, true);
    for (double u : {0.5, 1.3, 2.0})
      for (double v : {0.7, 1.9}) {
        double lhs = evaluate(a * b, u, v), rhs = evaluate(a, u, v) * evaluate(b, u, v);
        EXPECT_NEAR(lhs, rhs, 1e-9 * (1 + std::abs(rhs)));
      }
  }
}

TEST(Epoly, PowerIsRepeatedProduct) {
  auto a = MotivicClass::term(2, 1, 0) - MotivicClass::tate_power(Rational(1, 2));
  MotivicClass p = MotivicClass::one();
  for (std::uint64_t k = 0; k <= 5; ++k) {
    EXPECT_EQ(a.pow(k), p);
    p *= a;
  }
}

TEST(Epoly, HodgeNumbersOfIntegralClass) {
  auto e = MotivicClass::projective_space(2) + MotivicClass::term(1, 1, 1);
  auto h = e.hodge_numbers();
  EXPECT_EQ(h.size(), 3u);
  EXPECT_EQ((h[{0, 0}]), 1);
  EXPECT_EQ((h[{1, 1}]), 2);
  EXPECT_EQ((h[{2, 2}]), 1);
}

TEST(Epoly, HodgeNumbersAreStoredCoefficients) {
  auto e = MotivicClass::term(-3, 1, 0);
  EXPECT_EQ((e.hodge_numbers()[{1, 0}]), -3);
}

TEST(Epoly, NonIntegralExponentRaises) {
  auto e = MotivicClass::tate_power(Rational(2, 3)) + MotivicClass::tate();
  EXPECT_FALSE(e.has_integral_exponents());
  try {
    (void)e.hodge_numbers();
    FAIL() << "expected NonIntegralClass";
  } catch (const NonIntegralClass& err) {
    EXPECT_EQ(err.fractional_part(), Rational(2, 3));
  }
}

TEST(Epoly, FreeFunctionsMirrorMembers) {
  auto a = make_term(2, 1, 1), b = tate_power(2);
  EXPECT_EQ(add(a, b), a + b);
  EXPECT_EQ(mul(a, b), a * b);
  EXPECT_EQ(euler_characteristic(a), 2);
  EXPECT_EQ(hodge_numbers(b), (HodgeTable{{{2, 2}, 1}}));
}
