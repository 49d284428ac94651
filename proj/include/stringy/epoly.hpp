#pragma once

/**
 * @file epoly.hpp
 * @brief Hodge-Deligne E-polynomials with rational exponents.
 *
 * A MotivicClass is a finite sum  sum_c c * u^p * v^q  with integer
 * coefficients and nonnegative rational exponents. It is the ring in which
 * every class computed by the engine lives: the Tate class L is uv, and the
 * fractional powers L^(1/m) produced by twisted-sector shifts are (uv)^(1/m).
 *
 * Specializations:
 *   - euler_characteristic: u = v = 1;
 *   - hodge_numbers: coefficient table, defined only for integral exponents.
 */

#include "stringy/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace stringy {

/// Exponent pair (p, q) of the monomial u^p v^q.
struct Exponent {
  Rational p;
  Rational q;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend bool operator<(const Exponent& a, const Exponent& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  }
};

/// Raised when an integral-exponent view is requested of a class that has a
/// fractional exponent. Carries the offending exponent.
class NonIntegralClass : public Error {
 public:
  explicit NonIntegralClass(Exponent e)
      : Error("non-integral class: exponent (" + to_string(e.p) + ", " + to_string(e.q) + ")"),
        exponent_(std::move(e)) {}

  const Exponent& exponent() const { return exponent_; }

  /// The fractional component of the offending exponent (p if p is fractional, else q).
  const Rational& fractional_part() const { return is_integer(exponent_.p) ? exponent_.q : exponent_.p; }

 private:
  Exponent exponent_;
};

using HodgeTable = std::map<std::pair<std::int64_t, std::int64_t>, BigInt>;

class MotivicClass {
 public:
  using Terms = std::map<Exponent, BigInt>;

  /// The zero class.
  MotivicClass() = default;

  /// Canonicalizes an arbitrary term map: zero coefficients are dropped and
  /// exponents are checked to be nonnegative.
  static MotivicClass from_terms(Terms terms) {
    MotivicClass out;
    for (auto& [e, c] : terms) {
      check_exponent(e.p);
      check_exponent(e.q);
      if (c != 0) out.terms_.emplace(e, std::move(c));
    }
    return out;
  }

  static MotivicClass term(const BigInt& coeff, const Rational& p, const Rational& q) {
    check_exponent(p);
    check_exponent(q);
    MotivicClass out;
    if (coeff != 0) out.terms_.emplace(Exponent{p, q}, coeff);
    return out;
  }

  static MotivicClass constant(const BigInt& c) { return term(c, 0, 0); }
  static MotivicClass one() { return constant(1); }

  /// (uv)^e.
  static MotivicClass tate_power(const Rational& e) { return term(1, e, e); }

  /// The Tate class L = uv.
  static MotivicClass tate() { return tate_power(1); }

  /// 1 + L + ... + L^d, the class of projective d-space.
  static MotivicClass projective_space(std::int64_t d) {
    MotivicClass out;
    for (std::int64_t k = 0; k <= d; ++k) out += tate_power(k);
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of u^p v^q (zero when absent).
  BigInt coefficient(const Rational& p, const Rational& q) const {
    auto it = terms_.find(Exponent{p, q});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  MotivicClass& operator+=(const MotivicClass& other) {
    for (const auto& [e, c] : other.terms_) accumulate(e, c);
    return *this;
  }

  MotivicClass& operator-=(const MotivicClass& other) {
    for (const auto& [e, c] : other.terms_) accumulate(e, -c);
    return *this;
  }

  friend MotivicClass operator+(MotivicClass a, const MotivicClass& b) { return a += b; }
  friend MotivicClass operator-(MotivicClass a, const MotivicClass& b) { return a -= b; }

  friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
    MotivicClass out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.accumulate(Exponent{ea.p + eb.p, ea.q + eb.q}, ca * cb);
    return out;
  }

  MotivicClass& operator*=(const MotivicClass& other) { return *this = *this * other; }

  MotivicClass pow(std::uint64_t k) const {
    MotivicClass result = one();
    MotivicClass base = *this;
    while (k) {
      if (k & 1U) result *= base;
      base *= base;
      k >>= 1U;
    }
    return result;
  }

  friend bool operator==(const MotivicClass&, const MotivicClass&) = default;

  /// Specialization u = v = 1.
  BigInt euler_characteristic() const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
  }

  bool has_integral_exponents() const {
    for (const auto& [e, c] : terms_)
      if (!is_integer(e.p) || !is_integer(e.q)) return false;
    return true;
  }

  /// Coefficient table keyed by integer (p, q). Throws NonIntegralClass on the
  /// first (lexicographically smallest) fractional exponent.
  HodgeTable hodge_numbers() const {
    HodgeTable out;
    for (const auto& [e, c] : terms_) {
      if (!is_integer(e.p) || !is_integer(e.q)) throw NonIntegralClass(e);
      out.emplace(std::make_pair(static_cast<std::int64_t>(numerator(e.p)),
                                 static_cast<std::int64_t>(numerator(e.q))),
                  c);
    }
    return out;
  }

  /// Canonical text form, e.g. `1 + 2*(uv)^1 + 1*(uv)^2`. Terms ascend in
  /// (p, q); the constant term is the bare coefficient; the zero class is `0`.
  std::string render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += c.str();
      if (e.p == 0 && e.q == 0) continue;
      if (e.p == e.q) {
        out += "*(uv)^" + to_string(e.p);
      } else {
        out += "*(u^" + to_string(e.p) + ")*(v^" + to_string(e.q) + ")";
      }
    }
    return out;
  }

 private:
  static void check_exponent(const Rational& e) {
    if (e < 0) throw DomainError("negative exponent " + to_string(e));
  }

  void accumulate(const Exponent& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline MotivicClass make_term(const BigInt& coeff, const Rational& p, const Rational& q) {
  return MotivicClass::term(coeff, p, q);
}
inline MotivicClass add(const MotivicClass& a, const MotivicClass& b) { return a + b; }
inline MotivicClass mul(const MotivicClass& a, const MotivicClass& b) { return a * b; }
inline MotivicClass tate_power(const Rational& e) { return MotivicClass::tate_power(e); }
inline BigInt euler_characteristic(const MotivicClass& a) { return a.euler_characteristic(); }
inline HodgeTable hodge_numbers(const MotivicClass& a) { return a.hodge_numbers(); }

/// (uv - 1)^k, the class of the k-dimensional torus.
inline MotivicClass torus_class(std::uint64_t k) {
  return (MotivicClass::tate() - MotivicClass::one()).pow(k);
}

}  // namespace stringy
