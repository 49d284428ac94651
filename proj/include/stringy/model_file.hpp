#pragma once

/**
 * @file model_file.hpp
 * @brief Text model files.
 *
 * A model file is a list of `key = value` entries separated by newlines or by
 * top-level semicolons; `#` starts a comment. The `kind` key selects the
 * remaining grammar:
 *
 *   kind = cyclic-quotient     order = r; weights = w1, ..., wn
 *   kind = monomial-quotient   gen = <generator> (repeated); dim = n (needed without generators)
 *   kind = toric               rank = n; latgen = ... ; ray = ... ; cone = i, j, ...
 *   kind = wps                 weights = w0, ..., wn
 *
 * Generators use the syntax of parse_generator.
 */

#include "stringy/orbifold.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace stringy {

/// Diagnostic naming the offending line and key.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string key, const std::string& message)
      : Error(format(line, key, message)), line_(line), key_(std::move(key)) {}

  std::size_t line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  static std::string format(std::size_t line, const std::string& key, const std::string& message) {
    std::string where = line ? "line " + std::to_string(line) : std::string("model");
    if (!key.empty()) where += ", key '" + key + "'";
    return where + ": " + message;
  }

  std::size_t line_;
  std::string key_;
};

enum class ModelKind { kCyclicQuotient, kMonomialQuotient, kToric, kWeightedProjective };

struct ParsedModel {
  ModelKind kind;
  OrbifoldModel model;
};

struct ParseOptions {
  std::size_t group_cap = kDefaultGroupCap;
};

namespace detail {

struct Entry {
  std::size_t line;
  std::string key;
  std::string value;
};

inline std::vector<Entry> split_entries(std::string_view text) {
  std::vector<Entry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    for (const auto& piece : split_top_level(line, ';')) {
      if (piece.empty()) continue;
      auto eq = piece.find('=');
      if (eq == std::string::npos) throw ParseError(line_no, "", "expected 'key = value', got '" + piece + "'");
      std::string key(trim(std::string_view(piece).substr(0, eq)));
      std::string value(trim(std::string_view(piece).substr(eq + 1)));
      if (key.empty()) throw ParseError(line_no, "", "missing key before '='");
      out.push_back({line_no, std::move(key), std::move(value)});
    }
    pos = end + 1;
  }
  return out;
}

template <typename F>
auto with_context(const Entry& e, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(e.line, e.key, err.what());
  }
}

inline std::vector<std::int64_t> parse_int_list(const Entry& e) {
  return with_context(e, [&] {
    std::vector<std::int64_t> out;
    for (const auto& x : split_top_level(e.value, ',')) {
      BigInt v = parse_integer(x);
      if (abs(v) > BigInt(std::numeric_limits<std::int32_t>::max())) throw DomainError("integer out of range: " + x);
      out.push_back(static_cast<std::int64_t>(v));
    }
    return out;
  });
}

inline RatVector parse_rat_list(const Entry& e) {
  return with_context(e, [&] {
    RatVector out;
    for (const auto& x : split_top_level(e.value, ',')) out.push_back(parse_rational(x));
    return out;
  });
}

inline std::int64_t parse_single_int(const Entry& e) {
  auto v = parse_int_list(e);
  if (v.size() != 1) throw ParseError(e.line, e.key, "expected a single integer");
  return v[0];
}

}  // namespace detail

inline ParsedModel parse_model(std::string_view text, const ParseOptions& options = {}) {
  auto entries = detail::split_entries(text);

  const detail::Entry* kind_entry = nullptr;
  for (const auto& e : entries)
    if (e.key == "kind") {
      if (kind_entry) throw ParseError(e.line, e.key, "kind given twice");
      kind_entry = &e;
    }
  if (!kind_entry) throw ParseError(0, "kind", "missing required key 'kind'");

  static const std::map<std::string, ModelKind> kinds{{"cyclic-quotient", ModelKind::kCyclicQuotient},
                                                      {"monomial-quotient", ModelKind::kMonomialQuotient},
                                                      {"toric", ModelKind::kToric},
                                                      {"wps", ModelKind::kWeightedProjective}};
  auto kit = kinds.find(kind_entry->value);
  if (kit == kinds.end()) throw ParseError(kind_entry->line, "kind", "unknown kind '" + kind_entry->value + "'");
  const ModelKind kind = kit->second;

  static const std::map<ModelKind, std::vector<std::string>> allowed{
      {ModelKind::kCyclicQuotient, {"order", "weights"}},
      {ModelKind::kMonomialQuotient, {"gen", "dim"}},
      {ModelKind::kToric, {"rank", "latgen", "ray", "cone"}},
      {ModelKind::kWeightedProjective, {"weights"}}};
  std::map<std::string, std::vector<const detail::Entry*>> by_key;
  for (const auto& e : entries) {
    if (e.key == "kind") continue;
    const auto& ok = allowed.at(kind);
    if (std::find(ok.begin(), ok.end(), e.key) == ok.end())
      throw ParseError(e.line, e.key, "unknown key for kind '" + kind_entry->value + "'");
    by_key[e.key].push_back(&e);
  }
  auto single = [&](const std::string& key) -> const detail::Entry& {
    auto it = by_key.find(key);
    if (it == by_key.end()) throw ParseError(0, key, "missing required key '" + key + "'");
    if (it->second.size() > 1) throw ParseError(it->second[1]->line, key, "key given twice");
    return *it->second.front();
  };
  auto repeated = [&](const std::string& key) {
    auto it = by_key.find(key);
    return it == by_key.end() ? std::vector<const detail::Entry*>{} : it->second;
  };

  switch (kind) {
    case ModelKind::kCyclicQuotient: {
      const auto& order_e = single("order");
      const auto& weights_e = single("weights");
      auto order = detail::parse_single_int(order_e);
      if (order <= 0) throw ParseError(order_e.line, "order", "order must be positive");
      auto weights = detail::parse_int_list(weights_e);
      auto group = detail::with_context(weights_e, [&] {
        return close_group(weights.size(), {MonomialElement::cyclic(order, weights)}, options.group_cap);
      });
      return {kind, LocalQuotient{std::move(group)}};
    }
    case ModelKind::kMonomialQuotient: {
      std::vector<MonomialElement> gens;
      for (const auto* e : repeated("gen")) gens.push_back(detail::with_context(*e, [&] { return parse_generator(e->value); }));
      std::size_t n = 0;
      if (by_key.count("dim")) {
        const auto& dim_e = single("dim");
        auto d = detail::parse_single_int(dim_e);
        if (d <= 0) throw ParseError(dim_e.line, "dim", "dimension must be positive");
        n = static_cast<std::size_t>(d);
      } else if (!gens.empty()) {
        n = gens.front().dimension();
      } else {
        throw ParseError(0, "dim", "monomial-quotient without generators requires 'dim'");
      }
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].dimension() != n)
          throw ParseError(repeated("gen")[i]->line, "gen", "generator dimension differs from " + std::to_string(n));
      const detail::Entry& anchor = gens.empty() ? single("dim") : *repeated("gen").front();
      auto group = detail::with_context(anchor, [&] { return close_group(n, gens, options.group_cap); });
      return {kind, LocalQuotient{std::move(group)}};
    }
    case ModelKind::kToric: {
      const auto& rank_e = single("rank");
      auto rank = detail::parse_single_int(rank_e);
      if (rank <= 0) throw ParseError(rank_e.line, "rank", "rank must be positive");
      const auto n = static_cast<std::size_t>(rank);
      std::vector<RatVector> latgens;
      for (const auto* e : repeated("latgen")) {
        latgens.push_back(detail::parse_rat_list(*e));
        if (latgens.back().size() != n) throw ParseError(e->line, "latgen", "expected " + std::to_string(n) + " entries");
      }
      auto lattice = detail::with_context(rank_e, [&] { return RefinedLattice::from_generators(n, latgens); });
      std::vector<RatVector> rays;
      for (const auto* e : repeated("ray")) {
        rays.push_back(detail::parse_rat_list(*e));
        if (rays.back().size() != n) throw ParseError(e->line, "ray", "expected " + std::to_string(n) + " entries");
      }
      if (rays.empty()) throw ParseError(rank_e.line, "ray", "toric model requires at least one ray");
      std::vector<Cone> cones;
      for (const auto* e : repeated("cone")) {
        Cone c;
        for (auto i : detail::parse_int_list(*e)) {
          if (i < 0) throw ParseError(e->line, "cone", "negative ray index");
          c.rays.push_back(static_cast<std::size_t>(i));
        }
        cones.push_back(std::move(c));
      }
      if (cones.empty()) throw ParseError(rank_e.line, "cone", "toric model requires at least one cone");
      const auto& anchor = *repeated("cone").front();
      auto fan = detail::with_context(anchor, [&] { return Fan::build(lattice, rays, cones); });
      return {kind, ToricModel{std::move(fan)}};
    }
    case ModelKind::kWeightedProjective: {
      const auto& weights_e = single("weights");
      auto weights = detail::parse_int_list(weights_e);
      auto wp = detail::with_context(weights_e, [&] { return make_weighted_projective(weights); });
      return {kind, std::move(wp)};
    }
  }
  throw ParseError(0, "kind", "unreachable");
}

}  // namespace stringy
