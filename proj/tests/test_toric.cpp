#include "stringy/toric.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace stringy;

namespace {

struct CyclicCase {
  std::int64_t r;
  std::vector<std::int64_t> w;
};

Fan cyclic_orthant(std::int64_t r, const std::vector<std::int64_t>& w) {
  RatVector g;
  for (auto x : w) g.push_back(Rational(x, r));
  return orthant_fan(RefinedLattice::from_generators(w.size(), {g}));
}

// Every SL cyclic quotient 1/r(a, b, c) with r <= max_r, up to ordering.
std::vector<CyclicCase> sl_cyclic_cases(std::int64_t max_r) {
  std::vector<CyclicCase> out;
  for (std::int64_t r = 2; r <= max_r; ++r)
    for (std::int64_t a = 0; a < r; ++a)
      for (std::int64_t b = a; b < r; ++b)
        for (std::int64_t c = b; c < r; ++c)
          if ((a + b + c) % r == 0 && std::gcd(std::gcd(a, b), std::gcd(c, r)) == 1) out.push_back({r, {a, b, c}});
  return out;
}

// Brute force: q in (1/I Z)^k with 0 <= q < 1 and sum q_i v_i in the lattice.
std::set<RatVector> brute_box(const Fan& fan, const Cone& cone, std::int64_t I) {
  std::set<RatVector> out;
  const std::size_t k = cone.dim(), n = fan.rank();
  std::vector<std::int64_t> z(k, 0);
  for (;;) {
    RatVector p(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t d = 0; d < n; ++d) p[d] += Rational(z[i], I) * fan.rays()[cone.rays[i]][d];
    if (fan.lattice().contains(p)) out.insert(p);
    std::size_t i = 0;
    while (i < k && ++z[i] == I) z[i++] = 0;
    if (i == k) break;
  }
  return out;
}

// Sum over group elements of (uv)^{fixed_dim + age}, computed from the weights directly.
MotivicClass group_sum(std::int64_t r, const std::vector<std::int64_t>& w) {
  MotivicClass out;
  for (std::int64_t k = 0; k < r; ++k) {
    Rational a = 0;
    std::int64_t fixed = 0;
    for (auto x : w) {
      Rational f = frac(Rational(k * x, r));
      a += f;
      fixed += f == 0;
    }
    out += MotivicClass::tate_power(a + Rational(fixed));
  }
  return out;
}

Fan fan2(const std::vector<RatVector>& rays, const std::vector<std::vector<std::size_t>>& cones) {
  std::vector<Cone> cs;
  for (const auto& c : cones) cs.push_back(make_cone(c));
  return Fan::build(RefinedLattice::standard(rays.front().size()), rays, cs);
}

}  // namespace

TEST(Fan, BuildNormalizesAndClosesFaces) {
  auto fan = Fan::build(RefinedLattice::standard(2), {{2, 0}, {0, 3}}, {make_cone({0, 1})});
  EXPECT_EQ(fan.rays()[0], (RatVector{1, 0}));
  EXPECT_EQ(fan.rays()[1], (RatVector{0, 1}));
  EXPECT_EQ(fan.all_cones().size(), 4u);
  EXPECT_EQ(fan.all_cones().front().dim(), 0u);
  EXPECT_TRUE(is_smooth(fan));
  EXPECT_FALSE(fan.is_complete());
}

TEST(Fan, RejectsInvalidInput) {
  auto z2 = RefinedLattice::standard(2);
  EXPECT_THROW(Fan::build(z2, {{1, 0}, {2, 0}}, {make_cone({0})}), DomainError);
  EXPECT_THROW(Fan::build(z2, {{1, 0}, {0, 1}}, {make_cone({0, 2})}), DomainError);
  EXPECT_THROW(Fan::build(z2, {{1, 0}, {0, 1}, {1, 1}}, {make_cone({0, 1, 2})}), DomainError);
  // Overlapping cones.
  EXPECT_THROW(Fan::build(z2, {{1, 0}, {0, 1}, {1, 2}}, {make_cone({0, 1}), make_cone({0, 2})}), DomainError);
  EXPECT_THROW(Fan::build(z2, {{1, 0, 0}}, {make_cone({0})}), DomainError);
}

TEST(Fan, CompleteSmoothSurfaces) {
  auto p2 = fan2({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_TRUE(p2.is_complete());
  EXPECT_EQ(epoly_of_fan(p2).render(), "1 + 1*(uv)^1 + 1*(uv)^2");
  for (std::int64_t a = 0; a <= 4; ++a) {
    auto fa = fan2({{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    EXPECT_TRUE(fa.is_complete());
    EXPECT_EQ(epoly_of_fan(fa).render(), "1 + 2*(uv)^1 + 1*(uv)^2");
    EXPECT_EQ(epoly_of_fan(fa).euler_characteristic(), 4);
  }
  auto p1p1p1 = fan2({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                     {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
  EXPECT_EQ(epoly_of_fan(p1p1p1), MotivicClass::projective_space(1).pow(3));
}

TEST(Fan, EulerCharacteristicCountsMaximalCones) {
  auto fa = fan2({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(epoly_of_fan(fa).euler_characteristic(), 5);
}

TEST(Box, MatchesBruteForceEnumeration) {
  for (const auto& c : sl_cyclic_cases(9)) {
    auto fan = cyclic_orthant(c.r, c.w);
    for (const auto& cone : fan.all_cones()) {
      auto boxes = box_elements(fan, cone);
      auto index = cone_index(fan, cone);
      EXPECT_EQ(boxes.size(), index);
      std::set<RatVector> got;
      for (const auto& b : boxes) {
        got.insert(b.point);
        Rational s = 0;
        for (const auto& q : b.coefficients) {
          EXPECT_GE(q, 0);
          EXPECT_LT(q, 1);
          s += q;
        }
        EXPECT_EQ(s, b.age);
      }
      EXPECT_EQ(got, brute_box(fan, cone, static_cast<std::int64_t>(index)));
    }
  }
}

TEST(Box, NonOrthantCone) {
  auto fan = Fan::build(RefinedLattice::standard(2), {{1, 0}, {1, 3}}, {make_cone({0, 1})});
  EXPECT_EQ(cone_index(fan, fan.maximal_cones()[0]), 3);
  auto boxes = box_elements(fan, fan.maximal_cones()[0]);
  EXPECT_EQ(boxes.size(), 3u);
  EXPECT_EQ(boxes[1].point, (RatVector{1, 2}));
  EXPECT_EQ(boxes[2].point, (RatVector{1, 1}));
  EXPECT_EQ(boxes[1].age, 1);
  EXPECT_TRUE(is_gorenstein(fan));
  EXPECT_THROW(box_elements(fan, fan.maximal_cones()[0], 2), DomainError);
}

TEST(Gorenstein, Detection) {
  EXPECT_TRUE(is_gorenstein(cyclic_orthant(3, {1, 2})));
  EXPECT_FALSE(is_gorenstein(cyclic_orthant(3, {1, 1})));
  EXPECT_TRUE(is_gorenstein(cyclic_orthant(3, {1, 1, 1})));
  EXPECT_FALSE(is_gorenstein(cyclic_orthant(2, {1, 1, 1})));
  EXPECT_TRUE(is_gorenstein(weighted_projective_fan({1, 1, 2})));
  EXPECT_FALSE(is_gorenstein(weighted_projective_fan({1, 1, 3})));
}

TEST(Stringy, OrthantMatchesGroupElementSum) {
  for (const auto& c : sl_cyclic_cases(12)) EXPECT_EQ(stringy_epoly(cyclic_orthant(c.r, c.w)), group_sum(c.r, c.w));
  // Also away from SL, where exponents are fractional.
  for (std::int64_t r = 2; r <= 9; ++r)
    for (std::int64_t a = 1; a < r; ++a)
      if (std::gcd(a, r) == 1) {
        EXPECT_EQ(stringy_epoly(cyclic_orthant(r, {1, a})), group_sum(r, {1, a}));
      }
}

TEST(Stringy, NegativeControlHasFractionalExponent) {
  auto e = stringy_epoly(cyclic_orthant(3, {1, 1}));
  EXPECT_EQ(e.coefficient(Rational(2, 3), Rational(2, 3)), 1);
  EXPECT_THROW(e.hodge_numbers(), NonIntegralClass);
}

TEST(Stringy, SmoothDegeneration) {
  auto fa = fan2({{1, 0}, {0, 1}, {-1, 2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(stringy_epoly(fa), epoly_of_fan(fa));
  auto orth = orthant_fan(RefinedLattice::standard(3));
  EXPECT_EQ(stringy_epoly(orth), epoly_of_fan(orth));
  EXPECT_EQ(epoly_of_fan(orth).render(), "1*(uv)^3");
}

TEST(Resolve, McKayForSlCyclicQuotients) {
  for (const auto& c : sl_cyclic_cases(15)) {
    auto fan = cyclic_orthant(c.r, c.w);
    for (auto order : {PlacingOrder::kLexicographic, PlacingOrder::kReverseLexicographic}) {
      auto res = crepant_resolve(fan, {order, true});
      EXPECT_TRUE(is_smooth(res));
      // Normalized volume of the orthant in N is r.
      EXPECT_EQ(res.maximal_cones().size(), static_cast<std::size_t>(c.r));
      EXPECT_EQ(epoly_of_fan(res), stringy_epoly(fan)) << "1/" << c.r;
      // Every ray has age one: crepant.
      for (const auto& ray : res.rays()) {
        Rational s = 0;
        for (const auto& x : ray) s += x;
        EXPECT_EQ(s, 1);
      }
    }
  }
}

TEST(Resolve, ASeriesFollowsHirzebruchJung) {
  // r / (r - 1) = [2, 2, ..., 2]: each exceptional ray is the average of its neighbours.
  for (std::int64_t r = 2; r <= 30; ++r) {
    auto res = crepant_resolve(cyclic_orthant(r, {1, r - 1}));
    ASSERT_EQ(res.rays().size(), static_cast<std::size_t>(r + 1));
    std::vector<RatVector> chain(res.rays().begin(), res.rays().end());
    std::sort(chain.begin(), chain.end(), [](const RatVector& a, const RatVector& b) { return a[1] < b[1]; });
    for (std::size_t i = 1; i + 1 < chain.size(); ++i)
      for (std::size_t d = 0; d < 2; ++d) EXPECT_EQ(chain[i - 1][d] + chain[i + 1][d], 2 * chain[i][d]);
    EXPECT_EQ(epoly_of_fan(res).render(), std::to_string(r - 1) + "*(uv)^1 + 1*(uv)^2");
  }
}

TEST(Resolve, KeepsOriginalRayIndices) {
  auto fan = cyclic_orthant(5, {1, 1, 3});
  auto res = crepant_resolve(fan);
  for (std::size_t i = 0; i < fan.rays().size(); ++i) EXPECT_EQ(res.rays()[i], fan.rays()[i]);
  EXPECT_TRUE(std::is_sorted(res.rays().begin() + 3, res.rays().end()));
}

TEST(Resolve, RejectsNonGorensteinAndHighRank) {
  EXPECT_THROW(crepant_resolve(cyclic_orthant(3, {1, 1})), DomainError);
  EXPECT_THROW(crepant_resolve(cyclic_orthant(2, {1, 1, 1, 1})), DomainError);
}

TEST(Junior, PointsOfCone) {
  auto fan = cyclic_orthant(3, {1, 1, 1});
  auto pts = junior_points(fan, fan.maximal_cones()[0]);
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts[3].point, (RatVector{Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
}

TEST(WeightedProjective, FanShape) {
  for (const auto& w : std::vector<std::vector<std::int64_t>>{{1, 1, 2}, {1, 2, 3}, {2, 3, 5}, {1, 1, 1, 3}, {3, 4, 5}}) {
    auto fan = weighted_projective_fan(w);
    EXPECT_TRUE(fan.is_complete());
    // The cone omitting ray i has index w_i.
    for (std::size_t i = 0; i < w.size(); ++i)
      EXPECT_EQ(cone_index(fan, fan.maximal_cones()[w.size() - 1 - i]), w[i]);
    // The rays satisfy sum w_i v_i = 0.
    RatVector s(w.size() - 1, 0);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t d = 0; d < s.size(); ++d) s[d] += Rational(w[i]) * fan.rays()[i][d];
    EXPECT_EQ(s, RatVector(w.size() - 1, 0));
  }
  EXPECT_THROW(weighted_projective_fan({2, 4}), DomainError);
}

TEST(WeightedProjective, StringyPolynomials) {
  EXPECT_EQ(stringy_epoly(weighted_projective_fan({1, 1, 2})).render(), "1 + 2*(uv)^1 + 1*(uv)^2");
  EXPECT_EQ(stringy_epoly(weighted_projective_fan({1, 1, 1})), MotivicClass::projective_space(2));
  EXPECT_EQ(stringy_epoly(weighted_projective_fan({1, 1, 1, 1})), MotivicClass::projective_space(3));
  auto res = crepant_resolve(weighted_projective_fan({1, 1, 2}));
  EXPECT_TRUE(res.is_complete());
  EXPECT_EQ(epoly_of_fan(res).render(), "1 + 2*(uv)^1 + 1*(uv)^2");
}

TEST(Fan, ExponentAndRendering) {
  EXPECT_EQ(fan_exponent(cyclic_orthant(6, {1, 2, 3})), 6);
  EXPECT_EQ(fan_exponent(weighted_projective_fan({1, 2, 3})), 6);
  auto text = render_fan(cyclic_orthant(3, {1, 1, 1}));
  EXPECT_EQ(text, "kind = toric\nrank = 3\nlatgen = 1/3, 1/3, 1/3\nray = 1, 0, 0\nray = 0, 1, 0\nray = 0, 0, 1\ncone = 0, 1, 2\n");
}
