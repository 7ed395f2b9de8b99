#pragma once

#include <concepts>

#include "polyderive/quadext.hpp"
#include "polyderive/rational.hpp"

namespace polyderive {

/// Exact field element: Rational or QuadExt.
template <class S>
concept Scalar = std::regular<S> && requires(const S& x, const S& y) {
  { x + y } -> std::convertible_to<S>;
  { x - y } -> std::convertible_to<S>;
  { x * y } -> std::convertible_to<S>;
  { x / y } -> std::convertible_to<S>;
  { -x } -> std::convertible_to<S>;
  { sign(x) } -> std::convertible_to<int>;
  { inverse(x) } -> std::convertible_to<S>;
  { to_double(x) } -> std::convertible_to<double>;
};

static_assert(Scalar<Rational>);
static_assert(Scalar<QuadExt>);

template <Scalar S>
bool is_zero(const S& x) {
  return sign(x) == 0;
}

/// Rational -> S embedding.
template <Scalar S>
S embed(const Rational& r) {
  return S(r);
}

}  // namespace polyderive
