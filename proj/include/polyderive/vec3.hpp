#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "polyderive/error.hpp"
#include "polyderive/scalar.hpp"

namespace polyderive {

template <Scalar S>
struct Vec3 {
  S x{}, y{}, z{};

  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }

  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend Vec3 operator*(const S& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend Vec3 operator*(const Vec3& a, const S& s) { return s * a; }
  friend Vec3 operator/(const Vec3& a, const S& s) { return inverse(s) * a; }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

  bool is_zero() const { return polyderive::is_zero(x) && polyderive::is_zero(y) && polyderive::is_zero(z); }

  friend std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
  }
};

using RVec = Vec3<Rational>;
using QVec = Vec3<QuadExt>;

template <Scalar To, Scalar From>
Vec3<To> vec_cast(const Vec3<From>& v) {
  return {To(v.x), To(v.y), To(v.z)};
}

template <Scalar S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Right-handed cross product.
template <Scalar S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Determinant with rows a, b, c.
template <Scalar S>
S mixed(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
  return dot(a, cross(b, c));
}

/// Sum of cross(p_i, p_{i+1}) around the closed chain: twice the oriented
/// area vector. Needs at least three points.
template <Scalar S>
Vec3<S> area_vector(std::span<const Vec3<S>> points) {
  if (points.size() < 3) throw precondition_error("area_vector needs at least 3 points");
  Vec3<S> sum;
  for (std::size_t i = 0; i < points.size(); ++i) sum += cross(points[i], points[(i + 1) % points.size()]);
  return sum;
}

template <Scalar S>
Vec3<S> area_vector(const std::vector<Vec3<S>>& points) {
  return area_vector(std::span<const Vec3<S>>(points));
}

}  // namespace polyderive
