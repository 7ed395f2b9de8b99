#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polyderive/derived.hpp"

namespace polyderive {

/// Six rows of coordinates. build_support_matrix fills row i with
/// cross(u_{i-1}, u_i) (row 1 = cross(u_6, u_1)); edge_matrix fills row i
/// with u_{i+1} - u_i. Row indices in the public API are 1-based.
template <Scalar S>
struct SupportMatrix {
  std::array<Vec3<S>, 6> rows;

  const Vec3<S>& row(std::size_t i) const { return rows[(i - 1) % 6]; }

  Vec3<S> row_sum() const {
    Vec3<S> s;
    for (const auto& r : rows) s += r;
    return s;
  }
};

template <Scalar S>
using Sextuple = std::array<Vec3<S>, 6>;

template <Scalar S>
SupportMatrix<S> build_support_matrix(const Sextuple<S>& u) {
  SupportMatrix<S> m;
  for (std::size_t i = 0; i < 6; ++i) m.rows[i] = cross(u[(i + 5) % 6], u[i]);
  return m;
}

template <Scalar S>
SupportMatrix<S> edge_matrix(const Sextuple<S>& u) {
  SupportMatrix<S> m;
  for (std::size_t i = 0; i < 6; ++i) m.rows[i] = u[(i + 1) % 6] - u[i];
  return m;
}

/// Determinant of rows i < j < k (1-based).
template <Scalar S>
S submatrix_delta(const SupportMatrix<S>& m, std::size_t i, std::size_t j, std::size_t k) {
  if (!(1 <= i && i < j && j < k && k <= 6))
    throw precondition_error("submatrix_delta needs 1 <= i < j < k <= 6, got " + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k));
  return mixed(m.row(i), m.row(j), m.row(k));
}

/// Delta_i of the cyclic row sequence: rows i, i+1, i+2 (1-based, wrapping).
template <Scalar S>
S cyclic_delta(const SupportMatrix<S>& m, std::size_t i) {
  return mixed(m.row(i), m.row(i + 1), m.row(i + 2));
}

template <Scalar S>
struct AutoIdentity {
  S odd_product{};   // Delta_1 Delta_3 Delta_5
  S even_product{};  // Delta_2 Delta_4 Delta_6
  bool degenerate = false;  // some Delta vanished; callers resample

  bool holds() const { return odd_product == even_product; }
};

/// The support matrix of ANY sextuple satisfies Delta_1 Delta_3 Delta_5 = Delta_2 Delta_4 Delta_6.
template <Scalar S>
AutoIdentity<S> auto_identity_check(const Sextuple<S>& u) {
  const auto m = build_support_matrix(u);
  AutoIdentity<S> out{S(1), S(1), false};
  for (std::size_t i = 1; i <= 6; ++i) {
    const S d = cyclic_delta(m, i);
    if (is_zero(d)) out.degenerate = true;
    (i % 2 == 1 ? out.odd_product : out.even_product) *= d;
  }
  return out;
}

/// Sum of support-matrix rows; zero iff u supports a closed hexagon.
template <Scalar S>
Vec3<S> support_closure_defect(const Sextuple<S>& u) {
  return build_support_matrix(u).row_sum();
}

/// (D'_2 + D'_3 + D'_235 + D'_245, 2 D'_1 + D'_124 + D'_356) over the derived
/// edge matrix. Both vanish whenever u closes (support_closure_defect == 0).
template <Scalar S>
std::pair<S, S> first_degree_relations(const Sextuple<S>& u, const SupportMatrix<S>& derived_edges) {
  if (!support_closure_defect(u).is_zero()) throw precondition_error("first_degree_relations requires a closing sextuple");
  for (std::size_t i = 1; i <= 6; ++i)
    if (is_zero(cyclic_delta(derived_edges, i)))
      throw non_generic(i, degeneracy::coplanar_triple, "derived hexagon is not generic");
  const auto& m = derived_edges;
  S first = cyclic_delta(m, 2) + cyclic_delta(m, 3) + submatrix_delta(m, 2, 3, 5) + submatrix_delta(m, 2, 4, 5);
  S second = S(2) * cyclic_delta(m, 1) + submatrix_delta(m, 1, 2, 4) + submatrix_delta(m, 3, 5, 6);
  return {std::move(first), std::move(second)};
}

template <Scalar S>
std::pair<S, S> first_degree_relations(const Sextuple<S>& u) {
  return first_degree_relations(u, edge_matrix(u));
}

template <Scalar S>
Sextuple<S> to_sextuple(const std::vector<Vec3<S>>& u) {
  if (u.size() != 6) throw precondition_error("expected six vectors");
  return {u[0], u[1], u[2], u[3], u[4], u[5]};
}

}  // namespace polyderive
