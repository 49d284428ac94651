#pragma once

/**
 * @file qz_groups.hpp
 * @brief Finite groups of monomial matrices over roots of unity.
 *
 * A MonomialElement is a generalized permutation matrix M with
 *
 *     M[perm[i], i] = exp(2 pi i * angles[i]),   all other entries 0,
 *
 * where each angle is an exact fraction in [0, 1). Under this convention
 *
 *     (g * h).perm[i]   = g.perm[h.perm[i]]
 *     (g * h).angles[i] = h.angles[i] + g.angles[h.perm[i]]   (mod 1)
 *
 * Eigen-angles are read off the cycle structure: a cycle of length l whose
 * angles sum to s contributes the l angles (s + j) / l, j = 0..l-1.
 */

#include "stringy/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

namespace stringy {

/// A rational angle in [0, 1), i.e. a root of unity measured in full turns.
class QZ {
 public:
  QZ() = default;

  /// Reduces an arbitrary rational modulo 1.
  QZ(const Rational& r) {  // NOLINT(google-explicit-constructor)
    Rational f = frac(r);
    BigInt n = numerator(f), d = denominator(f);
    if (d > BigInt(std::numeric_limits<std::int64_t>::max() / 4))
      throw DomainError("angle denominator too large: " + to_string(r));
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  QZ(std::int64_t num, std::int64_t den) : QZ(Rational(num, den)) {}

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  /// Order of the root of unity.
  std::int64_t order() const { return den_; }

  Rational value() const { return Rational(num_, den_); }

  QZ operator-() const { return QZ(Rational(-num_, den_)); }
  friend QZ operator+(const QZ& a, const QZ& b) { return QZ(a.value() + b.value()); }
  friend QZ operator-(const QZ& a, const QZ& b) { return QZ(a.value() - b.value()); }

  friend bool operator==(const QZ&, const QZ&) = default;
  friend bool operator<(const QZ& a, const QZ& b) {
    __extension__ typedef __int128 Wide;
    return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
  }

  std::string str() const { return num_ == 0 ? "0" : std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

class MonomialElement {
 public:
  MonomialElement() = default;

  MonomialElement(std::vector<int> perm, std::vector<QZ> angles) : perm_(std::move(perm)), angles_(std::move(angles)) {
    if (perm_.size() != angles_.size())
      throw DomainError("monomial element: permutation and angle lengths differ");
    std::vector<bool> seen(perm_.size(), false);
    for (int p : perm_) {
      if (p < 0 || static_cast<std::size_t>(p) >= perm_.size() || seen[p])
        throw DomainError("monomial element: permutation is not a bijection");
      seen[p] = true;
    }
  }

  static MonomialElement identity(std::size_t n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return {std::move(perm), std::vector<QZ>(n)};
  }

  static MonomialElement diagonal(std::vector<QZ> angles) {
    std::vector<int> perm(angles.size());
    std::iota(perm.begin(), perm.end(), 0);
    return {std::move(perm), std::move(angles)};
  }

  /// The cyclic generator 1/r (w_1, ..., w_n).
  static MonomialElement cyclic(std::int64_t r, const std::vector<std::int64_t>& weights) {
    if (r <= 0) throw DomainError("cyclic generator requires a positive order");
    std::vector<QZ> angles;
    angles.reserve(weights.size());
    for (auto w : weights) angles.emplace_back(w, r);
    return diagonal(std::move(angles));
  }

  std::size_t dimension() const { return perm_.size(); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<QZ>& angles() const { return angles_; }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < perm_.size(); ++i)
      if (perm_[i] != static_cast<int>(i)) return false;
    return true;
  }

  bool is_identity() const {
    return is_diagonal() && std::all_of(angles_.begin(), angles_.end(), [](const QZ& a) { return a.is_zero(); });
  }

  friend MonomialElement operator*(const MonomialElement& g, const MonomialElement& h) {
    if (g.dimension() != h.dimension()) throw DomainError("monomial multiply: dimension mismatch");
    const std::size_t n = g.dimension();
    MonomialElement out;
    out.perm_.resize(n);
    out.angles_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int hi = h.perm_[i];
      out.perm_[i] = g.perm_[hi];
      out.angles_[i] = h.angles_[i] + g.angles_[hi];
    }
    return out;
  }

  MonomialElement inverse() const {
    const std::size_t n = dimension();
    MonomialElement out;
    out.perm_.resize(n);
    out.angles_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      // g maps coordinate i to perm[i]; the inverse maps perm[i] back to i.
      out.perm_[perm_[i]] = static_cast<int>(i);
      out.angles_[perm_[i]] = -angles_[i];
    }
    return out;
  }

  /// Cycles of the permutation, each listed from its smallest index.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(dimension(), false);
    for (std::size_t start = 0; start < dimension(); ++start) {
      if (seen[start]) continue;
      std::vector<int> cycle;
      for (int i = static_cast<int>(start); !seen[i]; i = perm_[i]) {
        seen[i] = true;
        cycle.push_back(i);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  /// Multiplicative order of the matrix.
  std::int64_t order() const {
    std::int64_t result = 1;
    for (const auto& cycle : cycles()) {
      QZ sum;
      for (int i : cycle) sum = sum + angles_[i];
      result = std::lcm(result, static_cast<std::int64_t>(cycle.size()) * sum.order());
    }
    return result;
  }

  /// Canonical key order: permutation word first, then angles by value.
  friend bool operator<(const MonomialElement& a, const MonomialElement& b) {
    if (a.perm_ != b.perm_) return a.perm_ < b.perm_;
    return a.angles_ < b.angles_;
  }
  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;

  /// `diag(...)` for diagonal elements, `mono(perm = [...]; angles = [...])` otherwise.
  std::string str() const {
    std::string angles;
    for (std::size_t i = 0; i < angles_.size(); ++i) angles += (i ? ", " : "") + angles_[i].str();
    if (is_diagonal()) return "diag(" + angles + ")";
    std::string perm;
    for (std::size_t i = 0; i < perm_.size(); ++i) perm += (i ? ", " : "") + std::to_string(perm_[i]);
    return "mono(perm = [" + perm + "]; angles = [" + angles + "])";
  }

 private:
  std::vector<int> perm_;
  std::vector<QZ> angles_;
};

inline MonomialElement multiply(const MonomialElement& g, const MonomialElement& h) { return g * h; }

/// Closure would exceed the configured element cap.
class GroupTooLarge : public Error {
 public:
  explicit GroupTooLarge(std::size_t cap)
      : Error("group too large: closure exceeds cap of " + std::to_string(cap) + " elements"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultGroupCap = 20000;

class MonomialGroup {
 public:
  std::size_t dimension() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<MonomialElement>& elements() const { return elements_; }
  const std::vector<MonomialElement>& generators() const { return generators_; }
  const MonomialElement& operator[](std::size_t i) const { return elements_[i]; }

  /// lcm of all element orders.
  std::int64_t exponent() const { return m_; }

  /// Position of g in elements(), or order() when absent.
  std::size_t index_of(const MonomialElement& g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || !(*it == g)) return order();
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool contains(const MonomialElement& g) const { return index_of(g) != order(); }

  bool is_diagonal() const {
    return std::all_of(elements_.begin(), elements_.end(), [](const auto& g) { return g.is_diagonal(); });
  }

  bool is_abelian() const {
    for (const auto& a : generators_)
      for (const auto& b : generators_)
        if (!(a * b == b * a)) return false;
    return true;
  }

 private:
  friend MonomialGroup close_group(std::size_t, const std::vector<MonomialElement>&, std::size_t);

  std::size_t n_ = 0;
  std::vector<MonomialElement> elements_;  // sorted by canonical key; identity first
  std::vector<MonomialElement> generators_;
  std::int64_t m_ = 1;
};

/// Breadth-first closure of the generators under right multiplication.
inline MonomialGroup close_group(std::size_t n, const std::vector<MonomialElement>& generators,
                                 std::size_t cap = kDefaultGroupCap) {
  if (cap < 1) throw DomainError("group closure cap must be at least 1");
  for (const auto& g : generators)
    if (g.dimension() != n) throw DomainError("generator dimension does not match n = " + std::to_string(n));

  std::map<MonomialElement, bool> seen;
  std::queue<MonomialElement> frontier;
  auto identity = MonomialElement::identity(n);
  seen.emplace(identity, true);
  frontier.push(identity);
  while (!frontier.empty()) {
    MonomialElement x = std::move(frontier.front());
    frontier.pop();
    for (const auto& s : generators) {
      MonomialElement y = x * s;
      if (seen.emplace(y, true).second) {
        if (seen.size() > cap) throw GroupTooLarge(cap);
        frontier.push(std::move(y));
      }
    }
  }

  MonomialGroup group;
  group.n_ = n;
  group.generators_ = generators;
  group.elements_.reserve(seen.size());
  for (auto& [g, unused] : seen) {
    group.m_ = std::lcm(group.m_, g.order());
    group.elements_.push_back(g);
  }
  return group;
}

struct ConjugacyClass {
  MonomialElement representative;  // member with the smallest canonical key
  std::vector<std::size_t> members;  // indices into the group's elements, ascending
  std::size_t centralizer_order = 0;
};

/// Partition into conjugation orbits, ordered by representative.
inline std::vector<ConjugacyClass> conjugacy_classes(const MonomialGroup& group) {
  const auto& elems = group.elements();
  std::vector<MonomialElement> conjugators;
  std::vector<MonomialElement> conjugator_inverses;
  for (const auto& s : group.generators()) {
    conjugators.push_back(s);
    conjugator_inverses.push_back(s.inverse());
  }

  std::vector<bool> assigned(elems.size(), false);
  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (assigned[i]) continue;
    ConjugacyClass cls;
    std::vector<std::size_t> stack{i};
    assigned[i] = true;
    while (!stack.empty()) {
      std::size_t j = stack.back();
      stack.pop_back();
      cls.members.push_back(j);
      for (std::size_t k = 0; k < conjugators.size(); ++k) {
        std::size_t c = group.index_of(conjugators[k] * elems[j] * conjugator_inverses[k]);
        if (!assigned[c]) {
          assigned[c] = true;
          stack.push_back(c);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = elems[cls.members.front()];
    cls.centralizer_order = elems.size() / cls.members.size();
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Eigenvalue angles as a sorted multiset of size n.
inline std::vector<QZ> eigen_angles(const MonomialElement& g) {
  std::vector<QZ> out;
  out.reserve(g.dimension());
  for (const auto& cycle : g.cycles()) {
    QZ sum;
    for (int i : cycle) sum = sum + g.angles()[i];
    const auto len = static_cast<std::int64_t>(cycle.size());
    for (std::int64_t j = 0; j < len; ++j) out.emplace_back((sum.value() + j) / len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Rational age(const MonomialElement& g) {
  Rational sum = 0;
  for (const auto& a : eigen_angles(g)) sum += a.value();
  return sum;
}

/// Degree-shifting number  sum_k (1 - k/m) rank(V_k)  over the nonzero
/// eigen-angles k/m of g. Equals age(g^-1).
inline Rational shift_w(const MonomialElement& g, std::int64_t m) {
  if (m <= 0 || m % g.order() != 0)
    throw DomainError("shift_w: element order " + std::to_string(g.order()) + " does not divide m = " +
                      std::to_string(m));
  Rational sum = 0;
  for (const auto& a : eigen_angles(g)) {
    if (a.is_zero()) continue;
    // a = k/m with k = a.num * (m / a.den)
    const std::int64_t k = a.num() * (m / a.den());
    sum += Rational(1) - Rational(k, m);
  }
  return sum;
}

inline std::size_t fixed_dim(const MonomialElement& g) {
  auto angles = eigen_angles(g);
  return static_cast<std::size_t>(std::count_if(angles.begin(), angles.end(), [](const QZ& a) { return a.is_zero(); }));
}

/// True iff every element has determinant 1 (integral age).
inline bool is_sl(const MonomialGroup& group) {
  return std::all_of(group.elements().begin(), group.elements().end(),
                     [](const MonomialElement& g) { return is_integer(age(g)); });
}

namespace detail {

inline std::vector<std::string> bracket_list(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw DomainError("expected bracketed list for " + std::string(what));
  auto inner = trim(s.substr(1, s.size() - 2));
  if (inner.empty()) return {};
  return split_top_level(inner, ',');
}

}  // namespace detail

/**
 * Parses one generator:
 *   diag(a1/b1, ..., an/bn)
 *   mono(perm = [i0, ..., i_{n-1}]; angles = [a1/b1, ...])
 *   cyclic r : w1, ..., wn
 */
inline MonomialElement parse_generator(std::string_view text) {
  std::string_view s = trim(text);
  auto starts_with = [&](std::string_view p) { return s.substr(0, p.size()) == p; };

  if (starts_with("cyclic")) {
    auto rest = s.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw DomainError("cyclic generator: expected 'cyclic r : w1, ..., wn'");
    BigInt r = parse_integer(rest.substr(0, colon));
    if (r <= 0) throw DomainError("cyclic generator: order must be positive");
    std::vector<QZ> angles;
    for (const auto& w : split_top_level(rest.substr(colon + 1), ','))
      angles.emplace_back(Rational(parse_integer(w), r));
    return MonomialElement::diagonal(std::move(angles));
  }

  auto open = s.find('(');
  if (open == std::string_view::npos || s.back() != ')')
    throw DomainError("malformed generator '" + std::string(text) + "'");
  auto head = trim(s.substr(0, open));
  auto body = s.substr(open + 1, s.size() - open - 2);

  if (head == "diag") {
    std::vector<QZ> angles;
    if (!trim(body).empty())
      for (const auto& a : split_top_level(body, ',')) angles.emplace_back(parse_rational(a));
    return MonomialElement::diagonal(std::move(angles));
  }
  if (head == "mono") {
    std::vector<int> perm;
    std::vector<QZ> angles;
    bool have_perm = false, have_angles = false;
    for (const auto& field : split_top_level(body, ';')) {
      auto eq = field.find('=');
      if (eq == std::string::npos) throw DomainError("mono generator: expected 'key = [...]'");
      auto key = trim(std::string_view(field).substr(0, eq));
      auto value = std::string_view(field).substr(eq + 1);
      if (key == "perm") {
        for (const auto& p : detail::bracket_list(value, "perm")) perm.push_back(static_cast<int>(parse_integer(p)));
        have_perm = true;
      } else if (key == "angles") {
        for (const auto& a : detail::bracket_list(value, "angles")) angles.emplace_back(parse_rational(a));
        have_angles = true;
      } else {
        throw DomainError("mono generator: unknown key '" + std::string(key) + "'");
      }
    }
    if (!have_perm || !have_angles) throw DomainError("mono generator requires both perm and angles");
    return {std::move(perm), std::move(angles)};
  }
  throw DomainError("unknown generator form '" + std::string(head) + "'");
}

}  // namespace stringy
