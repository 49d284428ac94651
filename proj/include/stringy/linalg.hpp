#pragma once

// Exact integer and rational linear algebra on small dense matrices.
// Matrices are row-major: m[row][col].

#include "stringy/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace stringy {

using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

namespace linalg {

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
inline std::tuple<BigInt, BigInt, BigInt> ext_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline IntMatrix zeros(std::size_t rows, std::size_t cols) { return IntMatrix(rows, IntVector(cols, 0)); }

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) out[i].emplace_back(x);
  return out;
}

inline RatMatrix transpose(const RatMatrix& m) {
  if (m.empty()) return {};
  RatMatrix out(m[0].size(), RatVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

inline RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  RatVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

/**
 * Column Hermite normal form of an n x k integer matrix of full row rank n:
 * an n x n lower-triangular basis H of the column lattice with positive
 * diagonal and 0 <= H[i][j] < H[i][i] for j < i. H is unique for the lattice.
 */
inline IntMatrix hermite_column_basis(IntMatrix a) {
  const std::size_t n = a.size();
  const std::size_t k = n ? a[0].size() : 0;
  auto col_combine = [&](std::size_t c1, std::size_t c2, const BigInt& x, const BigInt& y, const BigInt& u,
                         const BigInt& v) {
    // (c1, c2) <- (x*c1 + y*c2, u*c1 + v*c2), unimodular when x*v - y*u = +-1
    for (std::size_t r = 0; r < n; ++r) {
      BigInt p = a[r][c1], q = a[r][c2];
      a[r][c1] = x * p + y * q;
      a[r][c2] = u * p + v * q;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= k) throw DomainError("hermite_column_basis: matrix does not have full row rank");
    for (std::size_t j = i + 1; j < k; ++j) {
      if (a[i][j] == 0) continue;
      auto [g, x, y] = ext_gcd(a[i][i], a[i][j]);
      BigInt u = -a[i][j] / g, v = a[i][i] / g;
      col_combine(i, j, x, y, u, v);
    }
    if (a[i][i] == 0) throw DomainError("hermite_column_basis: matrix does not have full row rank");
    if (a[i][i] < 0)
      for (std::size_t r = 0; r < n; ++r) a[r][i] = -a[r][i];
    for (std::size_t j = 0; j < i; ++j) {
      BigInt q = floor(Rational(a[i][j], a[i][i]));
      if (q != 0)
        for (std::size_t r = 0; r < n; ++r) a[r][j] -= q * a[r][i];
    }
  }
  IntMatrix h = zeros(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h[r][c] = a[r][c];
  return h;
}

/**
 * For an n x k integer matrix C of column rank k, finds a unimodular U with
 * U C = [T; 0] and returns T: k x k upper triangular with positive diagonal.
 * The columns of T are the columns of C written in a basis of the saturated
 * sublattice  Z^n intersected with span(C).
 */
inline IntMatrix saturated_triangular_form(IntMatrix c) {
  const std::size_t n = c.size();
  const std::size_t k = n ? c[0].size() : 0;
  if (k > n) throw DomainError("saturated_triangular_form: more columns than rows");
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      if (c[i][j] == 0) continue;
      auto [g, x, y] = ext_gcd(c[j][j], c[i][j]);
      BigInt u = -c[i][j] / g, v = c[j][j] / g;
      for (std::size_t col = 0; col < k; ++col) {
        BigInt p = c[j][col], q = c[i][col];
        c[j][col] = x * p + y * q;
        c[i][col] = u * p + v * q;
      }
    }
    if (c[j][j] == 0) throw DomainError("saturated_triangular_form: columns are linearly dependent");
    if (c[j][j] < 0)
      for (std::size_t col = 0; col < k; ++col) c[j][col] = -c[j][col];
  }
  IntMatrix t = zeros(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t col = 0; col < k; ++col) t[r][col] = c[r][col];
  return t;
}

/// Solves T x = b for upper-triangular T with nonzero diagonal.
inline RatVector back_substitute(const IntMatrix& t, const RatVector& b) {
  const std::size_t k = t.size();
  RatVector x(k, 0);
  for (std::size_t ii = k; ii-- > 0;) {
    Rational s = b[ii];
    for (std::size_t j = ii + 1; j < k; ++j) s -= Rational(t[ii][j]) * x[j];
    x[ii] = s / Rational(t[ii][ii]);
  }
  return x;
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RatMatrix m) { return row_reduce(m).size(); }

inline Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

inline RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug(n, RatVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  RatMatrix out(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

/// Unique solution of A x = b (A square, nonsingular).
inline RatVector solve(const RatMatrix& a, const RatVector& b) { return mat_vec(inverse(a), b); }

/**
 * Exact feasibility of { y >= 0 : A y = b } by phase-one simplex with
 * Bland's rule. Returns a feasible point or nullopt.
 */
inline std::optional<RatVector> nonnegative_solution(RatMatrix a, RatVector b) {
  const std::size_t rows = a.size();
  const std::size_t vars = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i)
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  // Tableau columns: original vars, artificials, rhs. Objective row last.
  const std::size_t cols = vars + rows + 1;
  RatMatrix tab(rows + 1, RatVector(cols, 0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) tab[i][j] = a[i][j];
    tab[i][vars + i] = 1;
    tab[i][cols - 1] = b[i];
    basis[i] = vars + i;
  }
  // Minimize the sum of artificials: reduced costs are -(sum of rows).
  for (std::size_t j = 0; j < cols; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < rows; ++i) s += tab[i][j];
    tab[rows][j] = (j >= vars && j < vars + rows) ? Rational(0) : Rational(-s);
  }
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (tab[rows][j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][cols - 1] / tab[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen for phase one
    Rational inv = Rational(1) / tab[leave][enter];
    for (auto& x : tab[leave]) x *= inv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rational f = tab[i][enter];
      for (std::size_t j = 0; j < cols; ++j) tab[i][j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  if (tab[rows][cols - 1] != 0) return std::nullopt;
  RatVector y(vars, 0);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < vars) y[basis[i]] = tab[i][cols - 1];
  return y;
}

}  // namespace linalg
}  // namespace stringy
