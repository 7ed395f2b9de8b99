#pragma once

// Reference computations for the tests. Deliberately written against raw GMP
// rationals and plain arrays so they share no code with the library.

#include <array>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using V = std::array<Q, 3>;

inline Q q(const std::string& s) {
  Q r(s);
  r.canonicalize();
  return r;
}

inline V v(long x, long y, long z) { return {Q(x), Q(y), Q(z)}; }

/// Sum over the six permutations with their signs.
inline Q leibniz_det(const V& r0, const V& r1, const V& r2) {
  const std::array<const V*, 3> rows{&r0, &r1, &r2};
  static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  static constexpr int signs[6] = {1, 1, 1, -1, -1, -1};
  Q total = 0;
  for (int p = 0; p < 6; ++p) {
    Q term = signs[p];
    for (int r = 0; r < 3; ++r) term *= (*rows[r])[perms[p][r]];
    total += term;
  }
  return total;
}

/// Cross product from the Levi-Civita form: out_i = sum eps_ijk a_j b_k.
inline V cross(const V& a, const V& b) {
  V out{Q(0), Q(0), Q(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const int eps = (j - i) * (k - i) * (k - j) / 2;  // +1, -1 or 0
        if (eps != 0) out[i] += Q(eps) * a[j] * b[k];
      }
  return out;
}

inline V add(const V& a, const V& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline V sub(const V& a, const V& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline V scale(const Q& s, const V& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline bool is_zero(const V& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

inline std::vector<V> edges(const std::vector<V>& pts) {
  std::vector<V> e;
  for (std::size_t i = 0; i < pts.size(); ++i) e.push_back(sub(pts[(i + 1) % pts.size()], pts[i]));
  return e;
}

inline std::vector<Q> deltas(const std::vector<V>& e) {
  std::vector<Q> d;
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i) d.push_back(leibniz_det(e[i], e[(i + 1) % n], e[(i + 2) % n]));
  return d;
}

/// Double loop over 1 <= i < j <= n-1.
inline V derivability_sum(const std::vector<V>& e) {
  V s{Q(0), Q(0), Q(0)};
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    for (std::size_t j = i + 1; j + 1 < e.size(); ++j) s = add(s, cross(e[i], e[j]));
  return s;
}

/// Walks the polygon from an arbitrary start u and sums cross(P_k, P_{k+1}).
/// Independent of u when the edges close.
inline V walked_area(const V& start, const std::vector<V>& e) {
  std::vector<V> pts{start};
  for (std::size_t i = 0; i + 1 < e.size(); ++i) pts.push_back(add(pts.back(), e[i]));
  V s{Q(0), Q(0), Q(0)};
  for (std::size_t k = 0; k < pts.size(); ++k) s = add(s, cross(pts[k], pts[(k + 1) % pts.size()]));
  return s;
}

/// Support basis from the explicit alternating products
/// u_k = (D_{k-2} D_{k-4} ...)/(D_{k-1} D_{k-3} ...) cross(v_k, v_{k+1}), 0-based k.
inline std::vector<V> explicit_basis(const std::vector<V>& e) {
  const auto d = deltas(e);
  const std::size_t n = e.size();
  std::vector<V> u;
  for (std::size_t k = 0; k < n; ++k) {
    Q coeff = 1;
    for (std::size_t j = k; j-- > 0;) {
      if ((k - j) % 2 == 1) coeff /= d[j];
      else coeff *= d[j];
    }
    u.push_back(scale(coeff, cross(e[k], e[(k + 1) % n])));
  }
  return u;
}

}  // namespace oracle
