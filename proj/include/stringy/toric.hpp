#pragma once

/**
 * @file toric.hpp
 * @brief Simplicial fans over refined lattices, box elements, and
 * E-polynomials of toric orbifolds and their crepant resolutions.
 *
 * For a simplicial fan in a lattice N of rank n:
 *
 *   E(X)     = sum_{cones s} (uv - 1)^{n - dim s}
 *   E_st(X)  = sum_{cones s} (uv - 1)^{n - dim s} sum_{v in Box(s)} (uv)^{age(v)}
 *
 * where Box(s) holds the lattice points sum q_i r_i with 0 <= q_i < 1 over
 * the primitive rays r_i of s, and age(v) = sum q_i.
 */

#include "stringy/epoly.hpp"
#include "stringy/lattice.hpp"
#include "stringy/triangulation.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace stringy {

/// Sorted indices into a fan's ray list. The empty cone is the origin.
struct Cone {
  std::vector<std::size_t> rays;

  std::size_t dim() const { return rays.size(); }
  bool contains_face(const Cone& face) const {
    return std::includes(rays.begin(), rays.end(), face.rays.begin(), face.rays.end());
  }

  friend bool operator==(const Cone&, const Cone&) = default;
  friend bool operator<(const Cone& a, const Cone& b) {
    if (a.rays.size() != b.rays.size()) return a.rays.size() < b.rays.size();
    return a.rays < b.rays;
  }

  std::string label() const {
    std::string out = "cone{";
    for (std::size_t i = 0; i < rays.size(); ++i) out += (i ? "," : "") + std::to_string(rays[i]);
    return out + "}";
  }
};

inline Cone make_cone(std::vector<std::size_t> rays) {
  std::sort(rays.begin(), rays.end());
  return Cone{std::move(rays)};
}

/// Resolution produced a cone of index other than 1.
class NonUnimodular : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultBoxCap = 1'000'000;

class Fan {
 public:
  Fan() = default;

  /**
   * Normalizes rays to primitive lattice vectors, keeps the inclusion-maximal
   * cones, and validates simpliciality. With `check_intersections`, every
   * pair of maximal cones must meet in a common face (exact LP per pair).
   */
  static Fan build(RefinedLattice lattice, const std::vector<RatVector>& rays, const std::vector<Cone>& cones,
                   bool check_intersections = true) {
    Fan fan;
    fan.lattice_ = std::move(lattice);
    const std::size_t n = fan.lattice_.rank();
    for (const auto& r : rays) {
      if (r.size() != n) throw DomainError("ray dimension does not match rank " + std::to_string(n));
      RatVector p = fan.lattice_.primitive_on_ray(r);
      if (std::find(fan.rays_.begin(), fan.rays_.end(), p) != fan.rays_.end())
        throw DomainError("duplicate ray after normalization");
      fan.ray_coords_.push_back(fan.lattice_.integer_coordinates(p));
      fan.rays_.push_back(std::move(p));
    }

    std::set<Cone> given;
    for (const auto& c : cones) {
      Cone s = make_cone(c.rays);
      if (std::adjacent_find(s.rays.begin(), s.rays.end()) != s.rays.end())
        throw DomainError("cone lists a ray twice: " + s.label());
      for (auto i : s.rays)
        if (i >= fan.rays_.size()) throw DomainError("cone references missing ray " + std::to_string(i));
      if (fan.rank_of(s) != s.dim()) throw DomainError("non-simplicial cone " + s.label());
      given.insert(std::move(s));
    }
    for (const auto& s : given) {
      bool dominated = std::any_of(given.begin(), given.end(),
                                   [&](const Cone& t) { return t.dim() > s.dim() && t.contains_face(s); });
      if (!dominated) fan.maximal_.push_back(s);
    }
    if (fan.maximal_.empty()) fan.maximal_.push_back(Cone{});

    std::set<Cone> faces;
    for (const auto& s : fan.maximal_) {
      const std::size_t k = s.dim();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Cone f;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (std::uint64_t{1} << i)) f.rays.push_back(s.rays[i]);
        faces.insert(std::move(f));
      }
    }
    fan.all_.assign(faces.begin(), faces.end());

    if (check_intersections) fan.check_pairwise_intersections();
    return fan;
  }

  const RefinedLattice& lattice() const { return lattice_; }
  std::size_t rank() const { return lattice_.rank(); }
  const std::vector<RatVector>& rays() const { return rays_; }
  const std::vector<IntVector>& ray_coordinates() const { return ray_coords_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }

  /// Face closure of the maximal cones including the origin, ordered by (dim, rays).
  const std::vector<Cone>& all_cones() const { return all_; }

  /// Pure of full dimension with every codimension-one cone in exactly two maximal cones.
  bool is_complete() const {
    const std::size_t n = rank();
    for (const auto& s : maximal_)
      if (s.dim() != n) return false;
    if (n == 0) return true;
    for (const auto& f : all_) {
      if (f.dim() + 1 != n) continue;
      auto count = std::count_if(maximal_.begin(), maximal_.end(), [&](const Cone& s) { return s.contains_face(f); });
      if (count != 2) return false;
    }
    return true;
  }

  /// Integer matrix whose columns are the rays of `cone` in lattice coordinates.
  IntMatrix cone_matrix(const Cone& cone) const {
    IntMatrix m = linalg::zeros(rank(), cone.dim());
    for (std::size_t j = 0; j < cone.dim(); ++j)
      for (std::size_t i = 0; i < rank(); ++i) m[i][j] = ray_coords_[cone.rays[j]][i];
    return m;
  }

 private:
  std::size_t rank_of(const Cone& c) const {
    if (c.dim() == 0) return 0;
    return linalg::rank(linalg::to_rational(cone_matrix(c)));
  }

  void check_pairwise_intersections() const {
    const std::size_t n = rank();
    for (std::size_t a = 0; a < maximal_.size(); ++a) {
      for (std::size_t b = a + 1; b < maximal_.size(); ++b) {
        const Cone& s = maximal_[a];
        const Cone& t = maximal_[b];
        // Look for y >= 0 with sum a_i r_i = sum b_j s_j and a positive weight
        // on some ray outside the shared face.
        std::vector<std::size_t> cols_s = s.rays, cols_t = t.rays;
        const std::size_t vars = cols_s.size() + cols_t.size();
        RatMatrix a_mat(n + 1, RatVector(vars, 0));
        RatVector rhs(n + 1, 0);
        bool any_private = false;
        for (std::size_t j = 0; j < cols_s.size(); ++j) {
          for (std::size_t i = 0; i < n; ++i) a_mat[i][j] = rays_[cols_s[j]][i];
          bool shared = t.contains_face(Cone{{cols_s[j]}});
          a_mat[n][j] = shared ? 0 : 1;
          any_private |= !shared;
        }
        for (std::size_t j = 0; j < cols_t.size(); ++j) {
          for (std::size_t i = 0; i < n; ++i) a_mat[i][cols_s.size() + j] = -rays_[cols_t[j]][i];
          bool shared = s.contains_face(Cone{{cols_t[j]}});
          a_mat[n][cols_s.size() + j] = shared ? 0 : 1;
          any_private |= !shared;
        }
        if (!any_private) continue;
        rhs[n] = 1;
        if (linalg::nonnegative_solution(std::move(a_mat), std::move(rhs)))
          throw DomainError("cones " + s.label() + " and " + t.label() + " do not meet in a common face");
      }
    }
  }

  RefinedLattice lattice_;
  std::vector<RatVector> rays_;
  std::vector<IntVector> ray_coords_;
  std::vector<Cone> maximal_;
  std::vector<Cone> all_;
};

/// The positive orthant spanned by e_1..e_n over the given lattice.
inline Fan orthant_fan(const RefinedLattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<RatVector> rays;
  Cone cone;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n, 0);
    e[i] = 1;
    rays.push_back(std::move(e));
    cone.rays.push_back(i);
  }
  return Fan::build(lattice, rays, {cone}, false);
}

/// Multiplicity of the cone: the index of the sublattice its rays span inside
/// the lattice points of their linear span.
inline BigInt cone_index(const Fan& fan, const Cone& cone) {
  if (cone.dim() == 0) return 1;
  IntMatrix t = linalg::saturated_triangular_form(fan.cone_matrix(cone));
  BigInt index = 1;
  for (std::size_t i = 0; i < t.size(); ++i) index *= t[i][i];
  return index;
}

/// True iff a linear functional that is integral on the lattice takes the value 1 on every ray of the cone.
inline bool is_gorenstein(const Fan& fan, const Cone& cone) {
  if (cone.dim() == 0) return true;
  IntMatrix t = linalg::saturated_triangular_form(fan.cone_matrix(cone));
  // Solve T^T l = (1, ..., 1); T^T is lower triangular.
  const std::size_t k = t.size();
  RatVector l(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    Rational s = 1;
    for (std::size_t j = 0; j < i; ++j) s -= Rational(t[j][i]) * l[j];
    l[i] = s / Rational(t[i][i]);
    if (!is_integer(l[i])) return false;
  }
  return true;
}

inline bool is_gorenstein(const Fan& fan) {
  return std::all_of(fan.maximal_cones().begin(), fan.maximal_cones().end(),
                     [&](const Cone& c) { return is_gorenstein(fan, c); });
}

struct BoxElement {
  Cone cone;
  RatVector point;         // ambient coordinates
  RatVector coefficients;  // q_i, one per ray of the cone, each in [0, 1)
  Rational age;

  bool is_origin() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& q) { return q == 0; });
  }

  /// Rays of the cone carrying a nonzero coefficient: the smallest face containing the point.
  Cone support() const {
    Cone out;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
      if (coefficients[i] != 0) out.rays.push_back(cone.rays[i]);
    return out;
  }
};

/// All lattice points in the half-open parallelepiped of the cone, sorted by
/// (age, coefficients). Their number equals cone_index.
inline std::vector<BoxElement> box_elements(const Fan& fan, const Cone& cone, std::size_t cap = kDefaultBoxCap) {
  const std::size_t n = fan.rank();
  const std::size_t k = cone.dim();
  if (k == 0) return {BoxElement{cone, RatVector(n, 0), {}, 0}};

  IntMatrix t = linalg::saturated_triangular_form(fan.cone_matrix(cone));
  BigInt count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= t[i][i];
  if (count > cap) throw DomainError("box enumeration of " + cone.label() + " exceeds cap " + std::to_string(cap));

  // Coset representatives of Z^k / T Z^k: 0 <= z_i < T_ii.
  std::vector<BoxElement> out;
  IntVector z(k, 0);
  for (;;) {
    RatVector zr(z.begin(), z.end());
    RatVector q = linalg::back_substitute(t, zr);
    BoxElement box{cone, RatVector(n, 0), {}, 0};
    for (std::size_t i = 0; i < k; ++i) {
      Rational f = frac(q[i]);
      box.coefficients.push_back(f);
      box.age += f;
      const RatVector& r = fan.rays()[cone.rays[i]];
      for (std::size_t d = 0; d < n; ++d) box.point[d] += f * r[d];
    }
    out.push_back(std::move(box));
    std::size_t i = 0;
    while (i < k) {
      if (++z[i] < t[i][i]) break;
      z[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  std::sort(out.begin(), out.end(), [](const BoxElement& a, const BoxElement& b) {
    if (a.age != b.age) return a.age < b.age;
    return a.coefficients < b.coefficients;
  });
  return out;
}

inline bool is_smooth(const Fan& fan) {
  return std::all_of(fan.maximal_cones().begin(), fan.maximal_cones().end(),
                     [&](const Cone& c) { return cone_index(fan, c) == 1; });
}

/// E-polynomial by torus-orbit decomposition.
inline MotivicClass epoly_of_fan(const Fan& fan) {
  MotivicClass out;
  for (const auto& c : fan.all_cones()) out += torus_class(fan.rank() - c.dim());
  return out;
}

/// Stringy E-polynomial: orbit classes weighted by the box-element sum of each cone.
inline MotivicClass stringy_epoly(const Fan& fan) {
  MotivicClass out;
  for (const auto& c : fan.all_cones()) {
    MotivicClass boxes;
    for (const auto& b : box_elements(fan, c)) boxes += MotivicClass::tate_power(b.age);
    out += torus_class(fan.rank() - c.dim()) * boxes;
  }
  return out;
}

/// lcm of the denominators of all box coefficients: every local isotropy order divides it.
inline BigInt fan_exponent(const Fan& fan) {
  BigInt m = 1;
  for (const auto& c : fan.maximal_cones())
    for (const auto& b : box_elements(fan, c))
      for (const auto& q : b.coefficients) m = lcm(m, denominator(q));
  return m;
}

/// Lattice points at height one in the cone: its rays plus the box elements of age 1.
struct JuniorPoint {
  RatVector point;
  RatVector coefficients;  // barycentric, summing to 1
};

inline std::vector<JuniorPoint> junior_points(const Fan& fan, const Cone& cone) {
  std::vector<JuniorPoint> out;
  for (std::size_t i = 0; i < cone.dim(); ++i) {
    RatVector q(cone.dim(), 0);
    q[i] = 1;
    out.push_back({fan.rays()[cone.rays[i]], std::move(q)});
  }
  for (auto& b : box_elements(fan, cone))
    if (b.age == 1) out.push_back({std::move(b.point), std::move(b.coefficients)});
  return out;
}

/**
 * Crepant resolution of a Gorenstein simplicial fan of rank <= 3: every
 * maximal cone is subdivided along all of its height-one lattice points.
 * Rays of the input keep their indices; new rays follow in lexicographic
 * order. Every output cone is checked to be unimodular.
 */
inline Fan crepant_resolve(const Fan& fan, const TriangulationOptions& options = {}) {
  const std::size_t n = fan.rank();
  if (n > 3) throw DomainError("crepant resolution is limited to rank <= 3 (rank " + std::to_string(n) + ")");
  for (const auto& c : fan.maximal_cones())
    if (!is_gorenstein(fan, c)) throw DomainError("crepant resolution requires a Gorenstein fan; " + c.label() + " is not");

  std::vector<std::vector<JuniorPoint>> per_cone;
  std::set<RatVector> fresh;
  for (const auto& c : fan.maximal_cones()) {
    per_cone.push_back(junior_points(fan, c));
    for (std::size_t i = c.dim(); i < per_cone.back().size(); ++i) fresh.insert(per_cone.back()[i].point);
  }
  std::vector<RatVector> rays = fan.rays();
  for (const auto& p : fresh)
    if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
  auto ray_index = [&](const RatVector& p) {
    return static_cast<std::size_t>(std::find(rays.begin(), rays.end(), p) - rays.begin());
  };

  std::vector<Cone> cones;
  for (std::size_t ci = 0; ci < fan.maximal_cones().size(); ++ci) {
    const Cone& cone = fan.maximal_cones()[ci];
    const auto& pts = per_cone[ci];
    const std::size_t k = cone.dim();
    if (k <= 1) {
      cones.push_back(cone);
    } else if (k == 2) {
      std::vector<std::size_t> order(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return pts[a].coefficients[1] < pts[b].coefficients[1]; });
      for (std::size_t i = 0; i + 1 < order.size(); ++i)
        cones.push_back(make_cone({ray_index(pts[order[i]].point), ray_index(pts[order[i + 1]].point)}));
    } else {
      std::vector<Point2> chart;
      for (const auto& p : pts) chart.push_back({p.coefficients[1], p.coefficients[2]});
      for (const auto& tri : triangulate_in_triangle(chart, {0, 1, 2}, options))
        cones.push_back(make_cone({ray_index(pts[tri[0]].point), ray_index(pts[tri[1]].point),
                                   ray_index(pts[tri[2]].point)}));
    }
  }

  Fan out = Fan::build(fan.lattice(), rays, cones, false);
  for (const auto& c : out.maximal_cones()) {
    BigInt index = cone_index(out, c);
    if (index != 1)
      throw NonUnimodular("non-unimodular triangulation: " + c.label() + " has index " + index.str());
  }
  return out;
}

/// Fan of the weighted projective space P(w_0, ..., w_n): the images of the
/// standard basis in Z^{n+1} / Z w, with all n-element cones.
inline Fan weighted_projective_fan(const std::vector<std::int64_t>& weights) {
  const std::size_t n1 = weights.size();
  if (n1 < 2) throw DomainError("weighted projective space needs at least two weights");
  BigInt g = 0;
  for (auto w : weights) {
    if (w <= 0) throw DomainError("weights must be positive");
    g = gcd(g, BigInt(w));
  }
  if (g != 1) throw DomainError("weights are not coprime (gcd " + g.str() + ")");
  const std::size_t n = n1 - 1;

  std::vector<RatVector> rays(n1, RatVector(n, 0));
  auto unit = std::find(weights.begin(), weights.end(), 1);
  if (unit != weights.end()) {
    // e_i = -sum_{j != i} w_j e_j for the first unit weight i; the others form a basis.
    const std::size_t i0 = static_cast<std::size_t>(unit - weights.begin());
    std::size_t col = 0;
    for (std::size_t j = 0; j < n1; ++j) {
      if (j == i0) continue;
      rays[j][col] = 1;
      rays[i0][col] = -weights[j];
      ++col;
    }
  } else {
    // Row-reduce w to e_0 with a unimodular U; rows 1..n of U give the quotient map.
    IntMatrix u = linalg::zeros(n1, n1);
    for (std::size_t i = 0; i < n1; ++i) u[i][i] = 1;
    IntVector w(weights.begin(), weights.end());
    for (std::size_t i = 1; i < n1; ++i) {
      if (w[i] == 0) continue;
      auto [gg, x, y] = linalg::ext_gcd(w[0], w[i]);
      BigInt a = -w[i] / gg, b = w[0] / gg;
      for (std::size_t c = 0; c < n1; ++c) {
        BigInt p = u[0][c], q = u[i][c];
        u[0][c] = x * p + y * q;
        u[i][c] = a * p + b * q;
      }
      w[0] = gg;
      w[i] = 0;
    }
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t r = 0; r < n; ++r) rays[j][r] = Rational(u[r + 1][j]);
  }

  std::vector<Cone> cones;
  for (std::size_t omit = 0; omit < n1; ++omit) {
    Cone c;
    for (std::size_t j = 0; j < n1; ++j)
      if (j != omit) c.rays.push_back(j);
    cones.push_back(std::move(c));
  }
  return Fan::build(RefinedLattice::standard(n), rays, cones, false);
}

inline std::string render_vector(const RatVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out;
}

/// Fan in the model-file text format (`kind = toric`, `rank`, `latgen`, `ray`, `cone`).
inline std::string render_fan(const Fan& fan) {
  std::ostringstream os;
  os << "kind = toric\n";
  os << "rank = " << fan.rank() << "\n";
  for (const auto& g : fan.lattice().refining_generators()) os << "latgen = " << render_vector(g) << "\n";
  for (const auto& r : fan.rays()) os << "ray = " << render_vector(r) << "\n";
  for (const auto& c : fan.maximal_cones()) {
    os << "cone = ";
    for (std::size_t i = 0; i < c.rays.size(); ++i) os << (i ? ", " : "") << c.rays[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace stringy
