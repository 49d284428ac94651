#pragma once

/**
 * @file selftest.hpp
 * @brief Invariant suites run by the `selftest` command.
 *
 * Each suite checks an identity exhaustively over the built-in catalog or a
 * fixed family of small groups. The unit tests cover the same ground with
 * independent oracles; these run inside the shipped binary.
 */

#include "stringy/catalog.hpp"
#include "stringy/groupoids.hpp"

#include <functional>
#include <string>
#include <vector>

namespace stringy {

struct SuiteResult {
  std::string name;
  bool ok = true;
  std::size_t checks = 0;
  std::string detail;
};

namespace selftest {

inline std::vector<ParsedModel> catalog_models(std::size_t cap) {
  std::vector<ParsedModel> out;
  for (const auto& e : builtin_catalog()) {
    out.push_back(parse_model(e.text, {cap}));
    if (e.is_pair()) out.push_back(parse_model(e.partner_text, {cap}));
  }
  return out;
}

inline std::vector<MonomialGroup> catalog_groups(std::size_t cap) {
  std::vector<MonomialGroup> out;
  for (const auto& m : catalog_models(cap))
    if (auto* q = std::get_if<LocalQuotient>(&m.model)) out.push_back(q->group);
  return out;
}

template <typename F>
SuiteResult run_suite(std::string name, F&& body) {
  SuiteResult r;
  r.name = std::move(name);
  auto check = [&r](bool ok, const std::string& what) {
    ++r.checks;
    if (!ok && r.ok) {
      r.ok = false;
      r.detail = what;
    }
  };
  try {
    body(check);
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

using Check = std::function<void(bool, const std::string&)>;

inline void ring_laws(const Check& check) {
  std::vector<MotivicClass> xs{MotivicClass{},
                               MotivicClass::one(),
                               MotivicClass::tate(),
                               torus_class(2),
                               MotivicClass::projective_space(3),
                               MotivicClass::term(3, Rational(2, 3), Rational(2, 3)) - MotivicClass::term(2, 1, 0),
                               MotivicClass::term(-5, Rational(1, 2), 2) + MotivicClass::one()};
  for (const auto& a : xs)
    for (const auto& b : xs) {
      check(a + b == b + a && a * b == b * a, "commutativity");
      check((a - b) + b == a, "subtraction");
      for (const auto& c : xs) {
        check((a * b) * c == a * (b * c), "associativity");
        check(a * (b + c) == a * b + a * c, "distributivity");
      }
      check((a * b).euler_characteristic() == a.euler_characteristic() * b.euler_characteristic(), "chi multiplicative");
    }
}

inline void shift_identities(const Check& check, std::size_t cap) {
  for (const auto& g : catalog_groups(cap)) {
    const auto m = static_cast<std::int64_t>(g.exponent());
    const auto n = static_cast<std::int64_t>(g.dimension());
    for (const auto& x : g.elements()) {
      auto inv = x.inverse();
      check(shift_w(x, m) == age(inv), "shift_w = age(g^-1) at " + x.str());
      check(age(x) + age(inv) == Rational(n - static_cast<std::int64_t>(fixed_dim(x))), "age duality at " + x.str());
    }
  }
}

inline void pi0_equals_conj(const Check& check) {
  std::vector<GroupTable> groups;
  for (std::size_t n = 1; n <= 12; ++n) groups.push_back(cyclic_group_table(n));
  groups.push_back(symmetric_group_s3());
  groups.push_back(dihedral_group_d4());
  groups.push_back(quaternion_group_q8());
  for (const auto& h : groups) {
    auto g = point_groupoid(h);
    auto in = inertia(g);
    check(validate(g).ok && validate(in).ok, "groupoid axioms for " + h.name);
    check(pi0(in).size() == conjugacy_class_count(h), "pi0(inertia) for " + h.name);
  }
}

inline void catalog_groups_conjugacy(const Check& check, std::size_t cap) {
  for (const auto& g : catalog_groups(cap)) {
    auto table = group_table(g);
    check(conjugacy_classes(g).size() == conjugacy_class_count(table), "class count for " + g.generators().front().str());
    check(pi0(inertia(point_groupoid(table))).size() == conjugacy_classes(g).size(),
          "pi0(inertia) for " + g.generators().front().str());
  }
}

inline void sector_box_oracle(const Check& check, std::size_t cap) {
  for (const auto& g : catalog_groups(cap)) {
    if (!g.is_diagonal() || !is_sl(g)) continue;
    check(sector_sum(sectors_local_quotient(g)) == stringy_epoly(quotient_orthant_fan(g)),
          "sector sum vs box sum for " + g.generators().front().str());
  }
}

inline void toric_sector_route(const Check& check, std::size_t cap) {
  for (const auto& m : catalog_models(cap)) {
    auto fan = toric_fan_of(m.model);
    if (!fan) continue;
    check(sector_sum(sectors_toric(*fan)) == stringy_epoly(*fan), "minimal-cone grouping for " + describe(m.model));
    if (is_smooth(*fan)) check(stringy_epoly(*fan) == epoly_of_fan(*fan), "smooth degeneration");
  }
}

inline void mckay_catalog(const Check& check, std::size_t cap) {
  for (const auto& e : builtin_catalog()) {
    auto a = parse_model(e.text, {cap});
    if (e.is_pair()) {
      auto b = parse_model(e.partner_text, {cap});
      auto r = compare_k_equivalent(std::get<ToricModel>(a.model).fan, std::get<ToricModel>(b.model).fan);
      check(r.equal, "flop invariance for " + e.name);
      continue;
    }
    auto r = verify_mckay(a.model);
    check(r.skipped() ? !r.notes.empty() : r.equal, "McKay equality for " + e.name);
    if (!r.skipped()) check(r.euler_resolution && *r.euler_resolution == r.euler_orbifold, "Euler for " + e.name);
  }
}

inline void poincare_symmetry(const Check& check, std::size_t cap) {
  for (const auto& m : catalog_models(cap)) {
    if (!is_complete_model(m.model) || !is_sl_model(m.model)) continue;
    auto fan = toric_fan_of(m.model);
    const auto n = static_cast<std::int64_t>(fan ? fan->rank() : 0);
    auto e = orbifold_epoly(m.model);
    for (const auto& [pq, c] : e.terms())
      check(e.coefficient(Rational(n) - pq.p, Rational(n) - pq.q) == c, "Poincare symmetry for " + describe(m.model));
  }
}

inline void resolve_round_trip(const Check& check, std::size_t cap) {
  for (const auto& m : catalog_models(cap)) {
    auto fan = toric_fan_of(m.model);
    if (!fan || fan->rank() > 3 || !is_gorenstein(*fan)) continue;
    auto res = crepant_resolve(*fan);
    auto text = render_fan(res);
    auto back = parse_model(text, {cap});
    const auto& f = std::get<ToricModel>(back.model).fan;
    check(is_smooth(f), "resolved fan is smooth for " + describe(m.model));
    check(epoly_of_fan(f) == epoly_of_fan(res), "round trip keeps E for " + describe(m.model));
    check(render_fan(f) == text, "round trip is stable for " + describe(m.model));
    check(render_fan(crepant_resolve(*fan)) == text, "resolution is deterministic for " + describe(m.model));
  }
}

inline void stratification(const Check& check, std::size_t cap) {
  for (const auto& m : catalog_models(cap)) {
    auto fan = toric_fan_of(m.model);
    if (!fan) continue;
    auto strata = stratify_by_isotropy(*fan);
    check(strata.size() == fan->all_cones().size(), "one stratum per cone for " + describe(m.model));
  }
}

}  // namespace selftest

inline std::vector<SuiteResult> run_selftest(std::size_t cap = kDefaultGroupCap) {
  using namespace selftest;
  std::vector<SuiteResult> out;
  out.push_back(run_suite("ring laws", [](auto& c) { ring_laws(c); }));
  out.push_back(run_suite("shift identities", [cap](auto& c) { shift_identities(c, cap); }));
  out.push_back(run_suite("pi0(inertia) = Conj", [](auto& c) { pi0_equals_conj(c); }));
  out.push_back(run_suite("catalog conjugacy classes", [cap](auto& c) { catalog_groups_conjugacy(c, cap); }));
  out.push_back(run_suite("sector sum = box sum", [cap](auto& c) { sector_box_oracle(c, cap); }));
  out.push_back(run_suite("toric sector grouping", [cap](auto& c) { toric_sector_route(c, cap); }));
  out.push_back(run_suite("McKay on catalog", [cap](auto& c) { mckay_catalog(c, cap); }));
  out.push_back(run_suite("Poincare symmetry", [cap](auto& c) { poincare_symmetry(c, cap); }));
  out.push_back(run_suite("resolve round trip", [cap](auto& c) { resolve_round_trip(c, cap); }));
  out.push_back(run_suite("isotropy strata", [cap](auto& c) { stratification(c, cap); }));
  return out;
}

}  // namespace stringy
