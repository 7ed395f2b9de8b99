#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyderive/regularity.hpp"

namespace polyderive {

/// B_1 ... B_n: endpoints of a support system drawn from a common origin.
template <Scalar S>
struct DerivedPolygon {
  std::vector<Vec3<S>> vertices;
  EdgeVectors<S> edges;  // edges[i] = vertices[i+1] - vertices[i]

  std::size_t size() const { return vertices.size(); }
};

template <Scalar S>
DerivedPolygon<S> derived_from_points(std::vector<Vec3<S>> points) {
  if (points.size() < 3) throw precondition_error("a derived polygon needs at least 3 vertices");
  DerivedPolygon<S> p;
  p.edges = edge_vectors(points);
  p.vertices = std::move(points);
  return p;
}

template <Scalar A>
DerivedPolygon<A> derive(const SupportSystem<A>& s) {
  return derived_from_points(s.vectors);
}

struct Planarity {
  bool planar = true;
  std::size_t witness = 0;  // first 1-based k with B_k off the plane of B_1 B_2 B_3

  explicit operator bool() const { return planar; }
};

/// mixed(B_2 - B_1, B_3 - B_1, B_k - B_1) == 0 for all k >= 4. Triangles are planar.
template <Scalar S>
Planarity is_planar(const std::vector<Vec3<S>>& b) {
  if (b.size() < 4) return {};
  const Vec3<S> e1 = b[1] - b[0];
  const Vec3<S> e2 = b[2] - b[0];
  const Vec3<S> normal = cross(e1, e2);
  for (std::size_t k = 3; k < b.size(); ++k)
    if (!is_zero(dot(normal, b[k] - b[0]))) return {false, k + 1};
  return {};
}

template <Scalar S>
Planarity is_planar(const DerivedPolygon<S>& p) {
  return is_planar(p.vertices);
}

template <Scalar S>
struct DerivedDeltas {
  Deltas<S> deltas;
  bool generic = true;
};

template <Scalar S>
DerivedDeltas<S> derived_deltas(const DerivedPolygon<S>& p) {
  DerivedDeltas<S> out{deltas(p.edges), true};
  out.generic = static_cast<bool>(is_generic(p.edges));
  return out;
}

/// Delta_1 = Delta_4, Delta_2 = Delta_5, Delta_3 = Delta_6.
template <Scalar S>
bool strongly_regular_check(const Deltas<S>& d) {
  if (d.size() != 6) throw precondition_error("strong regularity is defined for hexagons only");
  return d[0] == d[3] && d[1] == d[4] && d[2] == d[5];
}

/// Canonical representative of the cyclic ratio Delta_1 : Delta_2 : Delta_3.
/// Each rotation is scaled to lead with 1; the lexicographically smallest wins.
template <Scalar S>
struct HexType {
  std::array<S, 3> triple;

  friend bool operator==(const HexType& a, const HexType& b) {
    return a.triple[0] == b.triple[0] && a.triple[1] == b.triple[1] && a.triple[2] == b.triple[2];
  }
};

template <Scalar S>
HexType<S> hex_type(const Deltas<S>& d) {
  if (d.size() != 6) throw precondition_error("hexagon type is defined for hexagons only");
  require_nonzero(d);
  if (!strongly_regular_check(d)) throw precondition_error("hexagon is not strongly regular; type undefined");
  auto lex_less = [](const std::array<S, 3>& a, const std::array<S, 3>& b) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (a[i] == b[i]) continue;
      return sign(a[i] - b[i]) < 0;
    }
    return false;
  };
  std::optional<std::array<S, 3>> best;
  for (std::size_t r = 0; r < 3; ++r) {
    const S lead = inverse(d[r]);
    std::array<S, 3> t{S(1), lead * d[r + 1], lead * d[r + 2]};
    if (!best || lex_less(t, *best)) best = std::move(t);
  }
  return {*best};
}

/// Odd vertices B_1, B_3, B_5 span plane Pi_1; the even ones are measured
/// against it and projected onto it.
template <Scalar S>
struct PlaneDecomposition {
  Vec3<S> normal;
  std::array<S, 3> odd_offsets;   // dot(B_k - B_1, normal), k = 1,3,5
  std::array<S, 3> even_offsets;  // k = 2,4,6
  std::array<Vec3<S>, 3> projected_even;
  Vec3<S> projected_area_vector;
  bool parallel_planes = false;  // even offsets all equal

  bool holds() const { return parallel_planes && projected_area_vector.is_zero(); }
};

template <Scalar S>
PlaneDecomposition<S> two_plane_decomposition(const std::vector<Vec3<S>>& b) {
  if (b.size() != 6) throw precondition_error("two-plane decomposition needs a hexagon");
  PlaneDecomposition<S> pd;
  pd.normal = cross(b[2] - b[0], b[4] - b[0]);
  if (pd.normal.is_zero())
    throw non_generic(1, degeneracy::collinear_pair, "B_1, B_3, B_5 are collinear; plane Pi_1 undefined");
  const S norm2 = dot(pd.normal, pd.normal);
  for (std::size_t k = 0; k < 3; ++k) {
    pd.odd_offsets[k] = dot(b[2 * k] - b[0], pd.normal);
    pd.even_offsets[k] = dot(b[2 * k + 1] - b[0], pd.normal);
    pd.projected_even[k] = b[2 * k + 1] - (pd.even_offsets[k] / norm2) * pd.normal;
  }
  pd.parallel_planes = pd.even_offsets[0] == pd.even_offsets[1] && pd.even_offsets[1] == pd.even_offsets[2];
  const std::vector<Vec3<S>> projected{b[0], pd.projected_even[0], b[2], pd.projected_even[1], b[4],
                                       pd.projected_even[2]};
  pd.projected_area_vector = area_vector(projected);
  return pd;
}

template <Scalar S>
PlaneDecomposition<S> two_plane_decomposition(const DerivedPolygon<S>& p) {
  return two_plane_decomposition(p.vertices);
}

/// Segment crossings of a planar quadrangle: B_1B_2 vs B_3B_4, and B_2B_3 vs B_4B_1.
template <Scalar S>
bool planar_self_intersection(const std::vector<Vec3<S>>& b) {
  if (b.size() != 4) throw precondition_error("self-intersection test is implemented for quadrangles");
  if (!is_planar(b)) throw precondition_error("quadrangle is not planar");
  // Any nonzero normal of the common plane orients the in-plane predicates.
  Vec3<S> normal;
  for (std::size_t i = 0; i < 4 && normal.is_zero(); ++i)
    normal = cross(b[(i + 1) % 4] - b[i], b[(i + 2) % 4] - b[i]);
  if (normal.is_zero()) throw precondition_error("quadrangle vertices are collinear");
  auto orient = [&](const Vec3<S>& p, const Vec3<S>& q, const Vec3<S>& r) {
    return sign(dot(normal, cross(q - p, r - p)));
  };
  auto proper = [&](const Vec3<S>& p, const Vec3<S>& q, const Vec3<S>& r, const Vec3<S>& s) {
    return orient(p, q, r) * orient(p, q, s) < 0 && orient(r, s, p) * orient(r, s, q) < 0;
  };
  return proper(b[0], b[1], b[2], b[3]) || proper(b[1], b[2], b[3], b[0]);
}

template <Scalar S>
bool planar_self_intersection(const DerivedPolygon<S>& p) {
  return planar_self_intersection(p.vertices);
}

/// One full derivation step of a rational polygon with an explicit alpha.
/// Throws not_regular / non_generic when the step is impossible.
template <Scalar A>
DerivedPolygon<A> derive_with_alpha(const EdgeVectors<Rational>& e, const A& alpha) {
  const Deltas<Rational> d = deltas(e);
  const auto verdict = check_regularity(d);
  if (!verdict.regular) throw not_regular("polygon is not regular");
  return derive(support_system(support_basis(e, d), verdict, alpha));
}

struct SecondDerivative {
  Deltas<Rational> first;   // Delta'
  Deltas<Rational> second;  // Delta''
  HexType<Rational> first_type;
  HexType<Rational> second_type;

  bool types_equal() const { return first_type == second_type; }

  /// Delta''_1/Delta''_2 = Delta'_2/Delta'_3 and its two cyclic shifts.
  bool shift_relations_hold() const {
    for (std::size_t i = 0; i < 3; ++i)
      if (!(second[i] * first[(i + 2) % 3] == second[(i + 1) % 3] * first[(i + 1) % 3])) return false;
    return true;
  }
};

/// P -> P' (alpha1) -> P'' (alpha2) for a regular hexagon, with both types.
inline SecondDerivative second_derivative_type(const EdgeVectors<Rational>& e, const Rational& alpha1,
                                               const Rational& alpha2) {
  if (e.size() != 6) throw precondition_error("second_derivative_type needs a hexagon");
  const auto p1 = derive_with_alpha(e, alpha1);
  require_generic(p1.edges);
  const auto p2 = derive_with_alpha(p1.edges, alpha2);
  require_generic(p2.edges);
  SecondDerivative out{deltas(p1.edges), deltas(p2.edges), {}, {}};
  out.first_type = hex_type(out.first);
  out.second_type = hex_type(out.second);
  return out;
}

}  // namespace polyderive
