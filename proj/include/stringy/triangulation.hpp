#pragma once

/**
 * @file triangulation.hpp
 * @brief Exact triangulations of planar point sets inside a triangle.
 *
 * Used to subdivide the height-one slice of a three-dimensional Gorenstein
 * cone. Points are inserted one at a time into the triangle spanned by the
 * three corners (placing order), then Lawson flips move the result to a
 * Delaunay triangulation. All predicates are exact rational determinants.
 * Cocircular configurations keep whichever diagonal the placing stage chose,
 * so the output is a function of the insertion order alone.
 */

#include "stringy/rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <vector>

namespace stringy {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend bool operator<(const Point2& a, const Point2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

/// Vertex indices in counter-clockwise order.
using Triangle = std::array<std::size_t, 3>;

enum class PlacingOrder { kLexicographic, kReverseLexicographic };

struct TriangulationOptions {
  PlacingOrder order = PlacingOrder::kLexicographic;
  bool delaunay = true;
};

namespace geometry {

/// Twice the signed area of (a, b, c); positive for counter-clockwise.
inline Rational orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// Positive iff d lies strictly inside the circumcircle of counter-clockwise (a, b, c).
inline Rational in_circle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  Rational adx = a.x - d.x, ady = a.y - d.y;
  Rational bdx = b.x - d.x, bdy = b.y - d.y;
  Rational cdx = c.x - d.x, cdy = c.y - d.y;
  Rational ad = adx * adx + ady * ady;
  Rational bd = bdx * bdx + bdy * bdy;
  Rational cd = cdx * cdx + cdy * cdy;
  return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
}

}  // namespace geometry

namespace detail {

inline void insert_point(std::vector<Triangle>& tris, const std::vector<Point2>& pts, std::size_t p) {
  using geometry::orient;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    auto [a, b, c] = tris[t];
    Rational o[3] = {orient(pts[b], pts[c], pts[p]), orient(pts[c], pts[a], pts[p]), orient(pts[a], pts[b], pts[p])};
    if (o[0] < 0 || o[1] < 0 || o[2] < 0) continue;
    int zeros = (o[0] == 0) + (o[1] == 0) + (o[2] == 0);
    if (zeros >= 2) throw DomainError("triangulation: duplicate point");
    if (zeros == 0) {
      tris[t] = {a, b, p};
      tris.push_back({b, c, p});
      tris.push_back({c, a, p});
      return;
    }
    // p lies on the edge opposite the vertex whose orientation vanished.
    int k = o[0] == 0 ? 0 : (o[1] == 0 ? 1 : 2);
    std::size_t apex = tris[t][k];
    std::size_t e0 = tris[t][(k + 1) % 3];
    std::size_t e1 = tris[t][(k + 2) % 3];
    tris[t] = {apex, e0, p};
    tris.push_back({apex, p, e1});
    for (std::size_t u = 0; u < tris.size(); ++u) {
      if (u == t) continue;
      for (int j = 0; j < 3; ++j) {
        if (tris[u][(j + 1) % 3] == e1 && tris[u][(j + 2) % 3] == e0) {
          std::size_t other = tris[u][j];
          tris[u] = {other, e1, p};
          tris.push_back({other, p, e0});
          return;
        }
      }
    }
    return;  // boundary edge
  }
  throw DomainError("triangulation: point outside the current triangulation");
}

/// Performs one Delaunay flip if an illegal interior edge exists.
inline bool flip_one(std::vector<Triangle>& tris, const std::vector<Point2>& pts) {
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, int>> edge_owner;
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (int j = 0; j < 3; ++j) edge_owner[{tris[t][(j + 1) % 3], tris[t][(j + 2) % 3]}] = {t, j};
  for (std::size_t t = 0; t < tris.size(); ++t) {
    for (int j = 0; j < 3; ++j) {
      std::size_t a = tris[t][(j + 1) % 3], b = tris[t][(j + 2) % 3], c = tris[t][j];
      auto it = edge_owner.find({b, a});
      if (it == edge_owner.end()) continue;
      auto [u, k] = it->second;
      std::size_t d = tris[u][k];
      if (geometry::in_circle(pts[a], pts[b], pts[c], pts[d]) <= 0) continue;
      if (geometry::orient(pts[a], pts[d], pts[c]) <= 0 || geometry::orient(pts[d], pts[b], pts[c]) <= 0) continue;
      tris[t] = {a, d, c};
      tris[u] = {d, b, c};
      return true;
    }
  }
  return false;
}

}  // namespace detail

/**
 * Triangulates `pts` using every point as a vertex. `corners` names three
 * points spanning a triangle that contains all others. Output triangles are
 * counter-clockwise and sorted.
 */
inline std::vector<Triangle> triangulate_in_triangle(const std::vector<Point2>& pts, Triangle corners,
                                                     const TriangulationOptions& options = {}) {
  if (geometry::orient(pts[corners[0]], pts[corners[1]], pts[corners[2]]) == 0)
    throw DomainError("triangulation: corners are collinear");
  if (geometry::orient(pts[corners[0]], pts[corners[1]], pts[corners[2]]) < 0) std::swap(corners[1], corners[2]);

  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != corners[0] && i != corners[1] && i != corners[2]) rest.push_back(i);
  std::sort(rest.begin(), rest.end(), [&](std::size_t i, std::size_t j) { return pts[i] < pts[j]; });
  if (options.order == PlacingOrder::kReverseLexicographic) std::reverse(rest.begin(), rest.end());

  std::vector<Triangle> tris{corners};
  for (std::size_t p : rest) detail::insert_point(tris, pts, p);
  if (options.delaunay)
    while (detail::flip_one(tris, pts)) {
    }

  for (auto& t : tris) {
    auto m = std::min_element(t.begin(), t.end()) - t.begin();
    std::rotate(t.begin(), t.begin() + m, t.end());
  }
  std::sort(tris.begin(), tris.end());
  return tris;
}

}  // namespace stringy
