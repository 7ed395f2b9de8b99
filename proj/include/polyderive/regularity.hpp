#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyderive/polygon.hpp"

namespace polyderive {

template <Scalar S>
struct RegularityVerdict {
  bool regular = false;
  Parity parity = Parity::even;
  /// even n: odd_product - even_product; odd n: the full product.
  S evidence{};
  S odd_product{};   // Delta_1 Delta_3 ...
  S even_product{};  // Delta_2 Delta_4 ...
  /// odd n only: odd_product / even_product. Positive exactly when regular.
  std::optional<S> alpha_squared;
};

/// even n: regular iff the odd- and even-indexed Delta products agree.
/// odd n: regular iff the product of all Deltas is positive.
template <Scalar S>
RegularityVerdict<S> check_regularity(const Deltas<S>& d) {
  require_nonzero(d);
  RegularityVerdict<S> v;
  v.parity = parity_of(d.size());
  v.odd_product = S(1);
  v.even_product = S(1);
  for (std::size_t i = 0; i < d.size(); ++i) (i % 2 == 0 ? v.odd_product : v.even_product) *= d[i];
  if (v.parity == Parity::even) {
    v.evidence = v.odd_product - v.even_product;
    v.regular = is_zero(v.evidence);
  } else {
    v.evidence = v.odd_product * v.even_product;
    v.regular = sign(v.evidence) > 0;
    v.alpha_squared = v.odd_product / v.even_product;
  }
  return v;
}

/// u_k = c_k * cross(v_k, v_{k+1}) with c_1 = 1 and c_{k+1} c_k Delta_k = 1.
template <Scalar S>
struct SupportBasis {
  std::vector<Vec3<S>> vectors;
  std::vector<S> coefficients;

  std::size_t size() const { return vectors.size(); }
};

template <Scalar S>
SupportBasis<S> support_basis(const EdgeVectors<S>& e, const Deltas<S>& d) {
  if (d.size() != e.size()) throw precondition_error("edge and delta counts differ");
  require_nonzero(d);
  const std::size_t n = e.size();
  SupportBasis<S> b;
  b.coefficients.reserve(n);
  b.vectors.reserve(n);
  b.coefficients.push_back(S(1));
  for (std::size_t k = 0; k + 1 < n; ++k) b.coefficients.push_back(inverse(b.coefficients[k] * d[k]));
  for (std::size_t k = 0; k < n; ++k) b.vectors.push_back(b.coefficients[k] * cross(e[k], e[k + 1]));
  for (std::size_t k = 0; k + 1 < n; ++k)
    if (!(cross(b.vectors[k], b.vectors[k + 1]) == e[k + 1]))
      throw std::logic_error("support basis recurrence broke at index " + std::to_string(k + 1));
  return b;
}

template <Scalar S>
SupportBasis<S> support_basis(const EdgeVectors<S>& e) {
  return support_basis(e, deltas(e));
}

/// cross(u_n, u_1) - v_1. Zero iff the unscaled basis already closes.
template <Scalar S>
Vec3<S> closure_defect(const SupportBasis<S>& b, const EdgeVectors<S>& e) {
  if (b.size() != e.size() || b.size() == 0) throw precondition_error("basis and edge counts differ");
  return cross(b.vectors.back(), b.vectors.front()) - e[0];
}

/// u'_i = alpha u_i for even i, u_i / alpha for odd i (1-based), over scalar A.
template <Scalar A>
struct SupportSystem {
  std::vector<Vec3<A>> vectors;
  A alpha{};
  Parity parity = Parity::even;

  std::size_t size() const { return vectors.size(); }
};

template <Scalar A, Scalar S>
SupportSystem<A> support_system(const SupportBasis<S>& b, const RegularityVerdict<S>& verdict, const A& alpha) {
  if (!verdict.regular) throw not_regular("polygon is not regular; no support system exists");
  if (is_zero(alpha)) throw precondition_error("alpha must be nonzero");
  if (b.size() == 0) throw precondition_error("empty support basis");
  if (verdict.parity == Parity::odd) {
    const A expected = A(*verdict.alpha_squared);
    if (!(alpha * alpha == expected))
      throw precondition_error("alpha^2 must equal " + expected.to_string() + " for an odd polygon");
  }
  const A inv = inverse(alpha);
  SupportSystem<A> s;
  s.alpha = alpha;
  s.parity = verdict.parity;
  s.vectors.reserve(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    const Vec3<A> u = vec_cast<A>(b.vectors[k]);
    s.vectors.push_back(k % 2 == 1 ? alpha * u : inv * u);  // k is 0-based
  }
  return s;
}

/// +sqrt(alpha_squared), or its negation, for an odd regular polygon.
inline QuadExt canonical_alpha(const RegularityVerdict<Rational>& verdict, bool negative_root = false) {
  if (verdict.parity != Parity::odd || !verdict.alpha_squared)
    throw precondition_error("canonical alpha is defined for odd polygons only");
  if (!verdict.regular) throw not_regular("odd polygon with non-positive Delta product has no support system");
  const QuadExt root = QuadExt::root(*verdict.alpha_squared);
  return negative_root ? -root : root;
}

struct SupportCheck {
  bool ok = true;
  std::size_t first_failure = 0;        // 1-based i with cross(u_i, u_{i+1}) != v_{i+1}
  std::vector<std::size_t> failures;    // every failing i, 1-based

  explicit operator bool() const { return ok; }
};

template <Scalar A, Scalar S>
SupportCheck verify_support(const SupportSystem<A>& s, const EdgeVectors<S>& e) {
  if (s.size() != e.size()) throw precondition_error("support system and edge counts differ");
  SupportCheck out;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(cross(s.vectors[i], s.vectors[(i + 1) % n]) == vec_cast<A>(e[i + 1]))) {
      if (out.ok) out.first_failure = i + 1;
      out.ok = false;
      out.failures.push_back(i + 1);
    }
  }
  return out;
}

/// Both sides of cross(cross(a,b), cross(b,c)) = mixed(a,b,c) b.
template <Scalar S>
std::pair<Vec3<S>, Vec3<S>> double_cross_identity(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
  return {cross(cross(a, b), cross(b, c)), mixed(a, b, c) * b};
}

}  // namespace polyderive
