#pragma once

/**
 * @file groupoids.hpp
 * @brief Finite groupoids with explicit arrow tables, their inertia
 * groupoids, and connected components.
 *
 * Composition is diagrammatic: compose(a, b) means "a, then b" and is
 * defined exactly when target(a) == source(b). Then
 * source(compose(a, b)) == source(a) and target(compose(a, b)) == target(b).
 */

#include "stringy/qz_groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace stringy {

using ObjectId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  ObjectId source;
  ObjectId target;
  std::string label;
};

class FiniteGroupoid {
 public:
  static constexpr ArrowId kUndefined = static_cast<ArrowId>(-1);

  FiniteGroupoid() = default;

  /// Takes ownership of the tables; `compose` is row-major over (first, second).
  FiniteGroupoid(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<ArrowId> compose,
                 std::vector<ArrowId> identities, std::vector<ArrowId> inverses)
      : objects_(std::move(objects)),
        arrows_(std::move(arrows)),
        compose_(std::move(compose)),
        identities_(std::move(identities)),
        inverses_(std::move(inverses)) {}

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(ArrowId a) const { return arrows_[a]; }
  ObjectId source(ArrowId a) const { return arrows_[a].source; }
  ObjectId target(ArrowId a) const { return arrows_[a].target; }
  ArrowId identity(ObjectId x) const { return identities_[x]; }
  ArrowId inverse(ArrowId a) const { return inverses_[a]; }

  /// a then b; kUndefined unless target(a) == source(b).
  ArrowId compose(ArrowId a, ArrowId b) const { return compose_[a * arrows_.size() + b]; }

  bool is_loop(ArrowId a) const { return source(a) == target(a); }

  // Raw table access, used by the validator's negative tests.
  std::vector<ArrowId>& mutable_inverses() { return inverses_; }
  std::vector<ArrowId>& mutable_compose() { return compose_; }

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<ArrowId> compose_;
  std::vector<ArrowId> identities_;
  std::vector<ArrowId> inverses_;
};

/// A finite group as a multiplication table; multiply(g, h) is the product g*h.
struct GroupTable {
  std::string name;
  std::size_t order = 0;
  std::vector<std::size_t> product;  // row-major
  std::size_t identity = 0;
  std::vector<std::string> labels;

  std::size_t multiply(std::size_t g, std::size_t h) const { return product[g * order + h]; }

  std::size_t inverse(std::size_t g) const {
    for (std::size_t h = 0; h < order; ++h)
      if (multiply(g, h) == identity) return h;
    throw DomainError("group table: element has no inverse");
  }

  /// Builds a table from any closed set of elements with a product.
  template <typename T, typename Mul>
  static GroupTable from_elements(std::string name, const std::vector<T>& elems, Mul mul,
                                  std::function<std::string(const T&)> label) {
    GroupTable out;
    out.name = std::move(name);
    out.order = elems.size();
    out.product.resize(out.order * out.order);
    auto find = [&](const T& x) {
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (elems[i] == x) return i;
      throw DomainError("group table: set is not closed under the product");
    };
    for (std::size_t i = 0; i < out.order; ++i) {
      out.labels.push_back(label(elems[i]));
      for (std::size_t j = 0; j < out.order; ++j) out.product[i * out.order + j] = find(mul(elems[i], elems[j]));
    }
    out.identity = out.order;
    for (std::size_t e = 0; e < out.order && out.identity == out.order; ++e) {
      bool ok = true;
      for (std::size_t g = 0; g < out.order && ok; ++g) ok = out.multiply(e, g) == g && out.multiply(g, e) == g;
      if (ok) out.identity = e;
    }
    if (out.identity == out.order) throw DomainError("group table: no identity element");
    return out;
  }
};

inline GroupTable group_table(const MonomialGroup& group, std::string name = "monomial") {
  return GroupTable::from_elements<MonomialElement>(
      std::move(name), group.elements(), [](const auto& a, const auto& b) { return a * b; },
      [](const MonomialElement& g) { return g.str(); });
}

inline GroupTable cyclic_group_table(std::size_t n) {
  std::vector<std::size_t> elems(n);
  std::iota(elems.begin(), elems.end(), 0);
  return GroupTable::from_elements<std::size_t>(
      "C" + std::to_string(n), elems, [n](std::size_t a, std::size_t b) { return (a + b) % n; },
      [](const std::size_t& a) { return std::to_string(a); });
}

/// Permutation groups: composition (p * q)(i) = p(q(i)).
inline GroupTable permutation_group_table(std::string name, const std::vector<std::vector<int>>& generators) {
  std::vector<std::vector<int>> elems;
  const std::size_t n = generators.empty() ? 0 : generators[0].size();
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  elems.push_back(id);
  auto mul = [](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : generators) {
      auto h = mul(elems[i], g);
      if (std::find(elems.begin(), elems.end(), h) == elems.end()) elems.push_back(h);
    }
  return GroupTable::from_elements<std::vector<int>>(std::move(name), elems, mul, [](const std::vector<int>& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
    return s + "]";
  });
}

inline GroupTable symmetric_group_s3() { return permutation_group_table("S3", {{1, 0, 2}, {1, 2, 0}}); }

/// Symmetries of a square acting on its vertices 0..3.
inline GroupTable dihedral_group_d4() { return permutation_group_table("D4", {{1, 2, 3, 0}, {0, 3, 2, 1}}); }

/// The quaternion group as the monomial matrices generated by diag(i, -i) and [[0, -1], [1, 0]].
inline GroupTable quaternion_group_q8() {
  auto g = close_group(2, {parse_generator("diag(1/4, 3/4)"), parse_generator("mono(perm = [1, 0]; angles = [0, 1/2])")});
  return group_table(g, "Q8");
}

/// Number of conjugacy classes by brute force on the table.
inline std::size_t conjugacy_class_count(const GroupTable& table) {
  std::vector<bool> seen(table.order, false);
  std::size_t classes = 0;
  for (std::size_t g = 0; g < table.order; ++g) {
    if (seen[g]) continue;
    ++classes;
    for (std::size_t x = 0; x < table.order; ++x)
      seen[table.multiply(table.multiply(x, g), table.inverse(x))] = true;
  }
  return classes;
}

/// Left action of a group table on points 0..n-1.
using Action = std::function<std::size_t(std::size_t group_element, std::size_t point)>;

/**
 * The action groupoid: objects are the points, arrows are pairs (g, x) from x
 * to g.x, and (g, x) then (h, g.x) composes to (hg, x). The action axioms are
 * checked exhaustively.
 */
inline FiniteGroupoid action_groupoid(const std::vector<std::string>& points, const GroupTable& group,
                                      const Action& act) {
  const std::size_t np = points.size();
  const std::size_t ng = group.order;
  for (std::size_t x = 0; x < np; ++x) {
    if (act(group.identity, x) != x)
      throw DomainError("action axiom violated: identity moves point " + points[x]);
    for (std::size_t g = 0; g < ng; ++g) {
      if (act(g, x) >= np) throw DomainError("action maps outside the point set");
      for (std::size_t h = 0; h < ng; ++h)
        if (act(group.multiply(h, g), x) != act(h, act(g, x)))
          throw DomainError("action axiom violated: (hg).x != h.(g.x) at point " + points[x]);
    }
  }

  auto arrow_id = [np](std::size_t g, std::size_t x) { return g * np + x; };
  std::vector<Arrow> arrows(ng * np);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t x = 0; x < np; ++x)
      arrows[arrow_id(g, x)] = Arrow{x, act(g, x), "(" + group.labels[g] + ", " + points[x] + ")"};

  const std::size_t na = arrows.size();
  std::vector<ArrowId> compose(na * na, FiniteGroupoid::kUndefined);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t x = 0; x < np; ++x) {
      const std::size_t gx = act(g, x);
      for (std::size_t h = 0; h < ng; ++h)
        compose[arrow_id(g, x) * na + arrow_id(h, gx)] = arrow_id(group.multiply(h, g), x);
    }
  std::vector<ArrowId> identities(np), inverses(na);
  for (std::size_t x = 0; x < np; ++x) identities[x] = arrow_id(group.identity, x);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t x = 0; x < np; ++x) inverses[arrow_id(g, x)] = arrow_id(group.inverse(g), act(g, x));
  return FiniteGroupoid(points, std::move(arrows), std::move(compose), std::move(identities), std::move(inverses));
}

/// One-point action groupoid of a group: the group itself viewed as a groupoid.
inline FiniteGroupoid point_groupoid(const GroupTable& group) {
  return action_groupoid({"*"}, group, [](std::size_t, std::size_t) { return std::size_t{0}; });
}

/**
 * Inertia groupoid. Objects are the loops v of G. For each loop v and each
 * arrow a leaving its base point there is one arrow (v, a) from v to
 * w = a^-1 v a, the unique loop with v a = a w. Composition is inherited:
 * (v, a) then (w, b) is (v, a b).
 */
inline FiniteGroupoid inertia(const FiniteGroupoid& g) {
  std::vector<ArrowId> loops;
  std::vector<std::size_t> loop_index(g.arrow_count(), static_cast<std::size_t>(-1));
  for (ArrowId a = 0; a < g.arrow_count(); ++a)
    if (g.is_loop(a)) {
      loop_index[a] = loops.size();
      loops.push_back(a);
    }

  std::vector<std::string> objects;
  for (ArrowId v : loops) objects.push_back(g.arrow(v).label);

  // arrows leaving each object
  std::vector<std::vector<ArrowId>> out_of(g.object_count());
  for (ArrowId a = 0; a < g.arrow_count(); ++a) out_of[g.source(a)].push_back(a);

  std::vector<Arrow> arrows;
  std::vector<std::pair<std::size_t, ArrowId>> pairs;  // (loop position, witnessing arrow)
  std::map<std::pair<std::size_t, ArrowId>, ArrowId> id_of;
  for (std::size_t vi = 0; vi < loops.size(); ++vi) {
    ArrowId v = loops[vi];
    for (ArrowId a : out_of[g.source(v)]) {
      ArrowId w = g.compose(g.compose(g.inverse(a), v), a);
      id_of[{vi, a}] = arrows.size();
      arrows.push_back(Arrow{vi, loop_index[w], "(" + g.arrow(v).label + " | " + g.arrow(a).label + ")"});
      pairs.emplace_back(vi, a);
    }
  }

  const std::size_t na = arrows.size();
  std::vector<ArrowId> compose(na * na, FiniteGroupoid::kUndefined);
  std::vector<ArrowId> inverses(na);
  for (ArrowId x = 0; x < na; ++x) {
    auto [vi, a] = pairs[x];
    const std::size_t wi = arrows[x].target;
    inverses[x] = id_of.at({wi, g.inverse(a)});
    for (ArrowId b : out_of[g.target(a)]) compose[x * na + id_of.at({wi, b})] = id_of.at({vi, g.compose(a, b)});
  }
  std::vector<ArrowId> identities(loops.size());
  for (std::size_t vi = 0; vi < loops.size(); ++vi) identities[vi] = id_of.at({vi, g.identity(g.source(loops[vi]))});
  return FiniteGroupoid(std::move(objects), std::move(arrows), std::move(compose), std::move(identities),
                        std::move(inverses));
}

/// Connected components: objects joined by any arrow. Components are listed
/// by smallest member; members ascend.
inline std::vector<std::vector<ObjectId>> pi0(const FiniteGroupoid& g) {
  std::vector<std::size_t> parent(g.object_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : g.arrows()) {
    std::size_t r1 = find(a.source), r2 = find(a.target);
    if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
  }
  std::map<std::size_t, std::vector<ObjectId>> groups;
  for (ObjectId x = 0; x < g.object_count(); ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<ObjectId>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

struct ValidationReport {
  bool ok = true;
  std::string violation;  // first violation found, empty when ok

  explicit operator bool() const { return ok; }
};

/// Exhaustive check of the groupoid axioms; reports the first violation.
inline ValidationReport validate(const FiniteGroupoid& g) {
  const std::size_t na = g.arrow_count();
  const std::size_t no = g.object_count();
  auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
  auto name = [&](ArrowId a) { return "arrow " + std::to_string(a) + " " + g.arrow(a).label; };

  for (ArrowId a = 0; a < na; ++a)
    if (g.source(a) >= no || g.target(a) >= no) return fail(name(a) + ": endpoint out of range");
  for (ObjectId x = 0; x < no; ++x) {
    ArrowId e = g.identity(x);
    if (e >= na || g.source(e) != x || g.target(e) != x)
      return fail("identity of object " + std::to_string(x) + " is not a loop at it");
  }
  for (ArrowId a = 0; a < na; ++a) {
    for (ArrowId b = 0; b < na; ++b) {
      ArrowId c = g.compose(a, b);
      bool composable = g.target(a) == g.source(b);
      if (composable != (c != FiniteGroupoid::kUndefined))
        return fail("composition of " + name(a) + " and " + name(b) + " is defined incorrectly");
      if (composable && (c >= na || g.source(c) != g.source(a) || g.target(c) != g.target(b)))
        return fail("composition of " + name(a) + " and " + name(b) + " has wrong endpoints");
    }
    if (g.compose(g.identity(g.source(a)), a) != a || g.compose(a, g.identity(g.target(a))) != a)
      return fail(name(a) + ": identity law fails");
    ArrowId inv = g.inverse(a);
    if (inv >= na || g.source(inv) != g.target(a) || g.target(inv) != g.source(a) ||
        g.compose(a, inv) != g.identity(g.source(a)) || g.compose(inv, a) != g.identity(g.target(a)))
      return fail(name(a) + ": inverse law fails");
  }
  // Associativity over all composable triples.
  std::vector<std::vector<ArrowId>> out_of(no);
  for (ArrowId a = 0; a < na; ++a) out_of[g.source(a)].push_back(a);
  for (ArrowId a = 0; a < na; ++a)
    for (ArrowId b : out_of[g.target(a)]) {
      ArrowId ab = g.compose(a, b);
      for (ArrowId c : out_of[g.target(b)])
        if (g.compose(ab, c) != g.compose(a, g.compose(b, c)))
          return fail("associativity fails at " + name(a) + ", " + name(b) + ", " + name(c));
    }
  return {};
}

}  // namespace stringy
