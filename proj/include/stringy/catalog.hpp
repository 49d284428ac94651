#pragma once

/**
 * @file catalog.hpp
 * @brief Built-in example models, stored as model-file text.
 */

#include "stringy/model_file.hpp"

#include <string>
#include <vector>

namespace stringy {

struct CatalogEntry {
  std::string name;
  std::string text;
  /// Non-empty for a pair of fans compared with compare_k_equivalent.
  std::string partner_text;

  bool is_pair() const { return !partner_text.empty(); }
};

namespace detail {

inline std::string cyclic_text(std::int64_t r, const std::vector<std::int64_t>& weights) {
  std::string w;
  for (auto x : weights) w += (w.empty() ? "" : ", ") + std::to_string(x);
  return "kind = cyclic-quotient; order = " + std::to_string(r) + "; weights = " + w;
}

inline std::string square_cone_text(const std::string& first, const std::string& second) {
  return "kind = toric\nrank = 3\nray = 0, 0, 1\nray = 1, 0, 1\nray = 0, 1, 1\nray = 1, 1, 1\ncone = " + first +
         "\ncone = " + second + "\n";
}

}  // namespace detail

inline const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (std::int64_t r = 2; r <= 10; ++r)
      out.push_back({"A" + std::to_string(r - 1), detail::cyclic_text(r, {1, r - 1}), ""});
    out.push_back({"1/3(1,1,1)", detail::cyclic_text(3, {1, 1, 1}), ""});
    out.push_back({"1/5(1,1,3)", detail::cyclic_text(5, {1, 1, 3}), ""});
    out.push_back({"1/7(1,2,4)", detail::cyclic_text(7, {1, 2, 4}), ""});
    out.push_back({"1/2(1,1,0)", detail::cyclic_text(2, {1, 1, 0}), ""});
    out.push_back({"Z2xZ2 in SL3",
                   "kind = monomial-quotient\ngen = diag(1/2, 1/2, 0)\ngen = diag(0, 1/2, 1/2)\n", ""});
    out.push_back({"Q8 (D4)", "kind = monomial-quotient\ngen = diag(1/4, 3/4)\ngen = mono(perm = [1, 0]; angles = [0, 1/2])\n",
                   ""});
    out.push_back({"BD3 (D5)",
                   "kind = monomial-quotient\ngen = diag(1/6, 5/6)\ngen = mono(perm = [1, 0]; angles = [0, 1/2])\n", ""});
    out.push_back({"WP(1,1,2)", "kind = wps; weights = 1, 1, 2", ""});
    out.push_back({"WP(1,2,3)", "kind = wps; weights = 1, 2, 3", ""});
    out.push_back({"square-cone flop", detail::square_cone_text("0, 1, 3", "0, 2, 3"),
                   detail::square_cone_text("0, 1, 2", "1, 2, 3")});
    return out;
  }();
  return entries;
}

}  // namespace stringy
