#pragma once

#include "stringy/linalg.hpp"

#include <string>
#include <vector>

namespace stringy {

/// Largest common denominator accepted for refining generators.
inline constexpr std::int64_t kMaxLatticeDenominator = 1'000'000'000;

/**
 * A full-rank lattice N in Q^n containing Z^n, stored by a basis (columns).
 *
 * The basis is the column Hermite normal form of D*N divided by D, where D
 * is the exponent of N / Z^n. That makes the basis canonical: two lattices
 * are equal iff their bases are.
 */
class RefinedLattice {
 public:
  RefinedLattice() = default;

  static RefinedLattice standard(std::size_t n) { return from_generators(n, {}); }

  static RefinedLattice from_generators(std::size_t n, const std::vector<RatVector>& gens) {
    BigInt scale = 1;
    for (const auto& g : gens) {
      if (g.size() != n)
        throw DomainError("lattice generator has " + std::to_string(g.size()) + " entries, expected " +
                          std::to_string(n));
      for (const auto& x : g) scale = lcm(scale, denominator(x));
    }
    if (scale > kMaxLatticeDenominator)
      throw DomainError("lattice generator denominator exceeds cap " + std::to_string(kMaxLatticeDenominator));

    IntMatrix stacked = linalg::zeros(n, n + gens.size());
    for (std::size_t i = 0; i < n; ++i) stacked[i][i] = scale;
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) stacked[i][n + j] = numerator(gens[j][i] * Rational(scale));

    RefinedLattice out;
    out.rank_ = n;
    out.scale_ = scale;
    out.hnf_ = n ? linalg::hermite_column_basis(std::move(stacked)) : IntMatrix{};
    out.basis_.assign(n, RatVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.basis_[i][j] = Rational(out.hnf_[i][j], scale);
    out.inverse_ = n ? linalg::inverse(out.basis_) : RatMatrix{};
    return out;
  }

  std::size_t rank() const { return rank_; }

  /// Basis vectors are the columns.
  const RatMatrix& basis() const { return basis_; }

  RatVector basis_vector(std::size_t j) const {
    RatVector v(rank_);
    for (std::size_t i = 0; i < rank_; ++i) v[i] = basis_[i][j];
    return v;
  }

  Rational determinant() const { return rank_ ? linalg::determinant(basis_) : Rational(1); }

  /// |N / Z^n|.
  BigInt index() const { return numerator(Rational(1) / abs(determinant())); }

  /// Coordinates of v in the lattice basis.
  RatVector coordinates(const RatVector& v) const {
    if (v.size() != rank_) throw DomainError("vector dimension does not match lattice rank");
    return linalg::mat_vec(inverse_, v);
  }

  bool contains(const RatVector& v) const {
    for (const auto& c : coordinates(v))
      if (!is_integer(c)) return false;
    return true;
  }

  /// Integer coordinates of a lattice vector; throws if v is not in N.
  IntVector integer_coordinates(const RatVector& v) const {
    IntVector out;
    for (const auto& c : coordinates(v)) {
      if (!is_integer(c)) throw DomainError("vector is not in the lattice");
      out.push_back(numerator(c));
    }
    return out;
  }

  RatVector from_coordinates(const IntVector& c) const {
    RatVector v(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) v[i] += basis_[i][j] * Rational(c[j]);
    return v;
  }

  /// The primitive lattice vector on the ray through v (v != 0).
  RatVector primitive_on_ray(const RatVector& v) const {
    RatVector c = coordinates(v);
    BigInt den = 1;
    for (const auto& x : c) den = lcm(den, denominator(x));
    IntVector ic;
    BigInt g = 0;
    for (const auto& x : c) {
      ic.push_back(numerator(x * Rational(den)));
      g = gcd(g, ic.back());
    }
    if (g == 0) throw DomainError("ray generator is the zero vector");
    for (auto& x : ic) x /= g;
    return from_coordinates(ic);
  }

  friend bool operator==(const RefinedLattice& a, const RefinedLattice& b) {
    return a.rank_ == b.rank_ && a.basis_ == b.basis_;
  }

  /// Basis columns that are not standard unit vectors; with Z^n they generate N.
  std::vector<RatVector> refining_generators() const {
    std::vector<RatVector> out;
    for (std::size_t j = 0; j < rank_; ++j) {
      RatVector v = basis_vector(j);
      bool unit = true;
      for (std::size_t i = 0; i < rank_; ++i)
        if (v[i] != (i == j ? 1 : 0)) unit = false;
      if (!unit) out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::size_t rank_ = 0;
  BigInt scale_ = 1;
  IntMatrix hnf_;
  RatMatrix basis_;
  RatMatrix inverse_;
};

inline RefinedLattice lattice_from_generators(std::size_t n, const std::vector<RatVector>& gens) {
  return RefinedLattice::from_generators(n, gens);
}

}  // namespace stringy
