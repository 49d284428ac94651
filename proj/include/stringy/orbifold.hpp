#pragma once

/**
 * @file orbifold.hpp
 * @brief Twisted-sector decompositions and the orbifold E-polynomial
 *
 *     E_orb(X) = sum over sectors a of  E(X^a) * (uv)^{w(a)}
 *
 * for linear quotients C^n / G, simplicial toric orbifolds, and weighted
 * projective spaces, together with comparison against crepant resolutions.
 */

#include "stringy/epoly.hpp"
#include "stringy/qz_groups.hpp"
#include "stringy/toric.hpp"

#include <iomanip>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace stringy {

struct LocalQuotient {
  MonomialGroup group;
};

struct ToricModel {
  Fan fan;
};

struct WeightedProjective {
  std::vector<std::int64_t> weights;
};

using OrbifoldModel = std::variant<LocalQuotient, ToricModel, WeightedProjective>;

/// Validates weights: nonempty, positive, coprime as a tuple.
inline WeightedProjective make_weighted_projective(std::vector<std::int64_t> weights) {
  if (weights.size() < 2) throw DomainError("weighted projective space needs at least two weights");
  std::int64_t g = 0;
  for (auto w : weights) {
    if (w <= 0) throw DomainError("weights must be positive");
    g = std::gcd(g, w);
  }
  if (g != 1) throw DomainError("weights are not coprime (gcd " + std::to_string(g) + ")");
  return {std::move(weights)};
}

inline std::string describe(const OrbifoldModel& model) {
  struct Visitor {
    std::string operator()(const LocalQuotient& m) const {
      std::string gens;
      for (const auto& g : m.group.generators()) gens += (gens.empty() ? "" : ", ") + g.str();
      return "C^" + std::to_string(m.group.dimension()) + " / G, |G| = " + std::to_string(m.group.order()) +
             (gens.empty() ? "" : ", generators " + gens);
    }
    std::string operator()(const ToricModel& m) const {
      return "toric, rank " + std::to_string(m.fan.rank()) + ", " + std::to_string(m.fan.rays().size()) + " rays, " +
             std::to_string(m.fan.maximal_cones().size()) + " maximal cones";
    }
    std::string operator()(const WeightedProjective& m) const {
      std::string w;
      for (auto x : m.weights) w += (w.empty() ? "" : ",") + std::to_string(x);
      return "WP(" + w + ")";
    }
  };
  return std::visit(Visitor{}, model);
}

/// One twisted sector: the class of its underlying space and its shift w(a).
struct Sector {
  std::string label;
  MotivicClass fixed_epoly;
  Rational shift;

  MotivicClass term() const { return fixed_epoly * MotivicClass::tate_power(shift); }
};

inline MotivicClass sector_sum(const std::vector<Sector>& sectors) {
  MotivicClass out;
  for (const auto& s : sectors) out += s.term();
  return out;
}

/**
 * One sector per conjugacy class (g). The underlying space Fix(g) / C(g) is a
 * finite linear quotient of affine space, with class (uv)^{dim Fix(g)}. The
 * shift is w(g^-1) computed from the eigenspace ranks of g^-1, which is age(g).
 */
inline std::vector<Sector> sectors_local_quotient(const MonomialGroup& group) {
  std::vector<Sector> out;
  for (const auto& cls : conjugacy_classes(group)) {
    const auto& g = cls.representative;
    out.push_back(Sector{"(" + g.str() + ")", MotivicClass::tate_power(static_cast<std::int64_t>(fixed_dim(g))),
                         shift_w(g.inverse(), group.exponent())});
  }
  return out;
}

/// Angles t in [0, 1) with t * w_i integral for some i, ascending.
inline std::vector<Rational> wps_sector_angles(const std::vector<std::int64_t>& weights) {
  std::set<Rational> angles;
  for (auto w : weights)
    for (std::int64_t j = 0; j < w; ++j) angles.insert(Rational(j, w));
  return {angles.begin(), angles.end()};
}

/**
 * Sectors of P(w_0..w_n) indexed by angles t: the fixed locus is the weighted
 * projective subspace on I(t) = {i : t w_i integral}, with the class of
 * projective space of dimension |I(t)| - 1, and shift sum_{i not in I(t)} {t w_i}.
 */
inline std::vector<Sector> sectors_wps(const std::vector<std::int64_t>& weights) {
  auto wp = make_weighted_projective(weights);
  std::vector<Sector> out;
  for (const auto& t : wps_sector_angles(wp.weights)) {
    std::int64_t fixed = 0;
    Rational shift = 0;
    for (auto w : wp.weights) {
      Rational tw = t * w;
      if (is_integer(tw))
        ++fixed;
      else
        shift += frac(tw);
    }
    out.push_back(Sector{"theta=" + to_string(t), MotivicClass::projective_space(fixed - 1), shift});
  }
  return out;
}

/// Class of the orbit closure V(tau): sum over cones containing tau.
inline MotivicClass orbit_closure_class(const Fan& fan, const Cone& tau) {
  MotivicClass out;
  for (const auto& s : fan.all_cones())
    if (s.contains_face(tau)) out += torus_class(fan.rank() - s.dim());
  return out;
}

/// Toric sectors: one per box element v whose smallest containing cone is tau;
/// the underlying space is the orbit closure V(tau), the shift is age(v).
inline std::vector<Sector> sectors_toric(const Fan& fan) {
  std::vector<Sector> out;
  for (const auto& tau : fan.all_cones()) {
    MotivicClass closure;
    bool have_closure = false;
    for (const auto& b : box_elements(fan, tau)) {
      if (!(b.support() == tau)) continue;
      if (!have_closure) {
        closure = orbit_closure_class(fan, tau);
        have_closure = true;
      }
      out.push_back(Sector{tau.label() + " v=(" + render_vector(b.point) + ")", closure, b.age});
    }
  }
  return out;
}

inline Fan weighted_projective_fan(const WeightedProjective& m) { return weighted_projective_fan(m.weights); }

inline std::vector<Sector> sectors(const OrbifoldModel& model) {
  if (auto* q = std::get_if<LocalQuotient>(&model)) return sectors_local_quotient(q->group);
  if (auto* t = std::get_if<ToricModel>(&model)) return sectors_toric(t->fan);
  return sectors_wps(std::get<WeightedProjective>(model).weights);
}

/// Sum over sectors of E(X^a) (uv)^{w(a)}; toric models use the box-element formula.
inline MotivicClass orbifold_epoly(const OrbifoldModel& model) {
  if (auto* t = std::get_if<ToricModel>(&model)) return stringy_epoly(t->fan);
  return sector_sum(sectors(model));
}

/// Every local isotropy order divides this number.
inline BigInt model_exponent(const OrbifoldModel& model) {
  if (auto* q = std::get_if<LocalQuotient>(&model)) return q->group.exponent();
  if (auto* t = std::get_if<ToricModel>(&model)) return fan_exponent(t->fan);
  BigInt m = 1;
  for (auto w : std::get<WeightedProjective>(model).weights) m = lcm(m, BigInt(w));
  return m;
}

/// The refined-lattice orthant of a diagonal group: C^n / G as a toric variety.
inline Fan quotient_orthant_fan(const MonomialGroup& group) {
  if (!group.is_diagonal()) throw DomainError("toric model requires a diagonal group");
  std::vector<RatVector> gens;
  for (const auto& g : group.generators()) {
    RatVector v;
    for (const auto& a : g.angles()) v.push_back(a.value());
    gens.push_back(std::move(v));
  }
  return orthant_fan(RefinedLattice::from_generators(group.dimension(), gens));
}

/// A fan for the model when one exists: diagonal quotients, toric models, and weighted projective spaces.
inline std::optional<Fan> toric_fan_of(const OrbifoldModel& model) {
  if (auto* q = std::get_if<LocalQuotient>(&model)) {
    if (!q->group.is_diagonal()) return std::nullopt;
    return quotient_orthant_fan(q->group);
  }
  if (auto* t = std::get_if<ToricModel>(&model)) return t->fan;
  return weighted_projective_fan(std::get<WeightedProjective>(model));
}

/// SL condition for quotients, Gorenstein condition for fans.
inline bool is_sl_model(const OrbifoldModel& model) {
  if (auto* q = std::get_if<LocalQuotient>(&model)) return is_sl(q->group);
  if (auto* t = std::get_if<ToricModel>(&model)) return is_gorenstein(t->fan);
  return is_gorenstein(weighted_projective_fan(std::get<WeightedProjective>(model)));
}

inline bool is_complete_model(const OrbifoldModel& model) {
  if (std::holds_alternative<LocalQuotient>(model)) return false;
  if (auto* t = std::get_if<ToricModel>(&model)) return t->fan.is_complete();
  return true;
}

struct VerificationReport {
  std::string model;
  bool complete = false;
  std::vector<Sector> sectors;
  MotivicClass orbifold_class;
  std::optional<MotivicClass> resolution_class;
  bool equal = false;
  BigInt euler_orbifold = 0;
  std::optional<BigInt> euler_resolution;
  std::optional<HodgeTable> hodge;
  std::optional<std::string> non_integral_note;
  std::vector<std::string> notes;

  bool skipped() const { return !resolution_class.has_value(); }
};

namespace detail {

inline void fill_hodge(VerificationReport& r) {
  try {
    r.hodge = r.orbifold_class.hodge_numbers();
  } catch (const NonIntegralClass& e) {
    r.non_integral_note = e.what();
  }
}

inline void finish_comparison(VerificationReport& r, MotivicClass resolution) {
  r.euler_resolution = resolution.euler_characteristic();
  r.equal = r.orbifold_class.render() == resolution.render();
  r.resolution_class = std::move(resolution);
}

}  // namespace detail

/**
 * Compares the orbifold E-polynomial with that of a crepant resolution when
 * one can be built (diagonal quotients, toric models of rank <= 3, weighted
 * projective planes and lines); otherwise the comparison is skipped with a note.
 */
inline VerificationReport verify_mckay(const OrbifoldModel& model) {
  VerificationReport r;
  r.model = describe(model);
  r.complete = is_complete_model(model);
  if (!r.complete) r.notes.push_back("local model: completeness hypothesis not satisfied");
  r.sectors = sectors(model);
  r.orbifold_class = orbifold_epoly(model);
  r.euler_orbifold = r.orbifold_class.euler_characteristic();
  detail::fill_hodge(r);

  if (!is_sl_model(model)) {
    r.notes.push_back("resolution skipped: model is not SL/Gorenstein");
    return r;
  }
  auto fan = toric_fan_of(model);
  if (!fan) {
    const auto& g = std::get<LocalQuotient>(model).group;
    r.notes.push_back(std::string("resolution skipped: ") + (g.is_abelian() ? "abelian" : "nonabelian") +
                      " non-diagonal group has no toric model");
    return r;
  }
  if (fan->rank() > 3) {
    r.notes.push_back("resolution skipped: crepant resolution needs rank <= 3");
    return r;
  }
  try {
    detail::finish_comparison(r, epoly_of_fan(crepant_resolve(*fan)));
  } catch (const Error& e) {
    throw Error(std::string("crepant resolution failed for ") + r.model + ": " + e.what());
  }
  return r;
}

namespace detail {

/// Coordinates of v in a full-dimensional simplicial cone, if v lies in it.
inline std::optional<RatVector> cone_coordinates(const Fan& fan, const Cone& cone, const RatVector& v) {
  const std::size_t n = fan.rank();
  RatMatrix m(n, RatVector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m[i][j] = fan.rays()[cone.rays[j]][i];
  RatVector c = linalg::solve(m, v);
  for (const auto& x : c)
    if (x < 0) return std::nullopt;
  return c;
}

/// Checks v lies in |fan| and the crepancy function (1 on every ray, linear on
/// cones) takes `expected` there on every cone containing v.
inline void check_height(const Fan& fan, const RatVector& v, const Rational& expected, const std::string& what) {
  bool found = false;
  for (const auto& c : fan.maximal_cones()) {
    auto coords = cone_coordinates(fan, c, v);
    if (!coords) continue;
    found = true;
    Rational h = 0;
    for (const auto& x : *coords) h += x;
    if (h != expected)
      throw DomainError("fans are not crepant over a common base: " + what + " has height " + to_string(h) +
                        " in " + c.label() + ", expected " + to_string(expected));
  }
  if (!found) throw DomainError("fans have different support: " + what + " is not covered");
}

}  // namespace detail

/**
 * K-equivalence check for two smooth fans crepant over a common Gorenstein base:
 * same lattice, same support, and the same height function. Reports whether
 * their E-polynomials agree.
 */
inline VerificationReport compare_k_equivalent(const Fan& a, const Fan& b) {
  if (a.rank() != b.rank() || !(a.lattice() == b.lattice())) throw DomainError("fans live in different lattices");
  if (!is_smooth(a) || !is_smooth(b)) throw DomainError("compare requires smooth fans");
  const std::size_t n = a.rank();
  for (const Fan* f : {&a, &b})
    for (const auto& c : f->maximal_cones())
      if (c.dim() != n) throw DomainError("compare requires pure full-dimensional fans");

  auto cross_check = [n](const Fan& from, const Fan& into, const std::string& name) {
    for (std::size_t i = 0; i < from.rays().size(); ++i)
      detail::check_height(into, from.rays()[i], 1, name + " ray " + std::to_string(i));
    for (const auto& c : from.maximal_cones()) {
      RatVector bary(n, 0);
      for (auto r : c.rays)
        for (std::size_t d = 0; d < n; ++d) bary[d] += from.rays()[r][d];
      detail::check_height(into, bary, Rational(static_cast<std::int64_t>(n)), name + " " + c.label() + " barycenter");
    }
  };
  cross_check(a, b, "first fan");
  cross_check(b, a, "second fan");

  VerificationReport r;
  r.model = "K-equivalent pair: " + describe(ToricModel{a}) + " vs " + describe(ToricModel{b});
  r.complete = a.is_complete() && b.is_complete();
  if (!r.complete) r.notes.push_back("local model: completeness hypothesis not satisfied");
  r.orbifold_class = epoly_of_fan(a);
  r.euler_orbifold = r.orbifold_class.euler_characteristic();
  detail::fill_hodge(r);
  detail::finish_comparison(r, epoly_of_fan(b));
  return r;
}

struct Stratum {
  Cone cone;
  BigInt isotropy_order;
  std::vector<Rational> box_ages;
};

/// One stratum per torus orbit; asserts that the strata reassemble the orbifold class.
inline std::vector<Stratum> stratify_by_isotropy(const Fan& fan) {
  std::vector<Stratum> out;
  MotivicClass total;
  for (const auto& c : fan.all_cones()) {
    Stratum s{c, cone_index(fan, c), {}};
    MotivicClass local;
    for (const auto& b : box_elements(fan, c)) {
      s.box_ages.push_back(b.age);
      local += MotivicClass::tate_power(b.age);
    }
    total += torus_class(fan.rank() - c.dim()) * local;
    out.push_back(std::move(s));
  }
  if (!(total == orbifold_epoly(ToricModel{fan})))
    throw Error("stratification does not reassemble the orbifold class");
  return out;
}

// Rendering -----------------------------------------------------------------

inline std::string render_sector_table(const std::vector<Sector>& sectors) {
  std::size_t w_label = 6, w_class = 8;
  for (const auto& s : sectors) {
    w_label = std::max(w_label, s.label.size());
    w_class = std::max(w_class, s.fixed_epoly.render().size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w_label)) << "sector" << "  " << std::setw(static_cast<int>(w_class))
     << "E(X^a)" << "  shift\n";
  for (const auto& s : sectors)
    os << std::setw(static_cast<int>(w_label)) << s.label << "  " << std::setw(static_cast<int>(w_class))
       << s.fixed_epoly.render() << "  " << to_string(s.shift) << "\n";
  return os.str();
}

inline std::string render_hodge(const HodgeTable& h) {
  std::string out;
  for (const auto& [pq, c] : h)
    out += (out.empty() ? "" : ", ") + std::string("(") + std::to_string(pq.first) + "," +
           std::to_string(pq.second) + "):" + c.str();
  return out;
}

inline std::string render_kv(const VerificationReport& r) {
  std::ostringstream os;
  os << "model = " << r.model << "\n";
  os << "complete = " << (r.complete ? "true" : "false") << "\n";
  os << "sectors = " << r.sectors.size() << "\n";
  os << "eorb = " << r.orbifold_class.render() << "\n";
  if (r.resolution_class) os << "eres = " << r.resolution_class->render() << "\n";
  os << "equal = " << (r.skipped() ? "skipped" : (r.equal ? "true" : "false")) << "\n";
  os << "chi_orb = " << r.euler_orbifold << "\n";
  if (r.euler_resolution) os << "chi_res = " << *r.euler_resolution << "\n";
  if (r.hodge) os << "hodge = " << render_hodge(*r.hodge) << "\n";
  if (r.non_integral_note) os << "note = " << *r.non_integral_note << "\n";
  for (const auto& n : r.notes) os << "note = " << n << "\n";
  return os.str();
}

inline std::string render_table(const VerificationReport& r) {
  std::ostringstream os;
  os << render_kv(r);
  if (!r.sectors.empty()) os << "\n" << render_sector_table(r.sectors);
  return os.str();
}

}  // namespace stringy
