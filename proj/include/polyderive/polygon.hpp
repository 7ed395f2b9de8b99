#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyderive/error.hpp"
#include "polyderive/vec3.hpp"

namespace polyderive {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

inline Parity parity_of(std::size_t n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

/// Closed polygon A_1 ... A_n with rational vertices. May be non-generic.
class Polygon {
 public:
  explicit Polygon(std::vector<RVec> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3)
      throw precondition_error("a polygon needs at least 3 vertices, got " + std::to_string(vertices_.size()));
  }

  const std::vector<RVec>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const RVec& operator[](std::size_t i) const { return vertices_[i % vertices_.size()]; }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<RVec> vertices_;
};

/// Edge vectors v_i = A_{i+1} - A_i. Indexing is 0-based and cyclic.
template <Scalar S>
struct EdgeVectors {
  std::vector<Vec3<S>> vectors;

  std::size_t size() const { return vectors.size(); }
  const Vec3<S>& operator[](std::size_t i) const { return vectors[i % vectors.size()]; }

  Vec3<S> sum() const {
    Vec3<S> s;
    for (const auto& e : vectors) s += e;
    return s;
  }
  bool closed() const { return sum().is_zero(); }

  friend bool operator==(const EdgeVectors&, const EdgeVectors&) = default;
};

/// Delta_i = mixed(v_i, v_{i+1}, v_{i+2}), cyclic. 0-based storage.
template <Scalar S>
struct Deltas {
  std::vector<S> values;

  std::size_t size() const { return values.size(); }
  const S& operator[](std::size_t i) const { return values[i % values.size()]; }

  friend bool operator==(const Deltas&, const Deltas&) = default;
};

template <Scalar S>
EdgeVectors<S> edge_vectors(std::span<const Vec3<S>> points) {
  EdgeVectors<S> out;
  out.vectors.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out.vectors.push_back(points[(i + 1) % points.size()] - points[i]);
  return out;
}

template <Scalar S>
EdgeVectors<S> edge_vectors(const std::vector<Vec3<S>>& points) {
  return edge_vectors(std::span<const Vec3<S>>(points));
}

inline EdgeVectors<Rational> edge_vectors(const Polygon& p) { return edge_vectors(p.vertices()); }

/// Rebuilds vertices from closed edge vectors, starting at `origin`.
inline Polygon polygon_from_edges(const EdgeVectors<Rational>& e, const RVec& origin = {}) {
  if (e.size() < 3) throw precondition_error("a polygon needs at least 3 edges");
  if (!e.closed()) throw precondition_error("edge vectors do not sum to zero");
  std::vector<RVec> pts;
  pts.reserve(e.size());
  RVec at = origin;
  for (std::size_t i = 0; i < e.size(); ++i) {
    pts.push_back(at);
    at += e[i];
  }
  return Polygon(std::move(pts));
}

template <Scalar S>
Deltas<S> deltas(const EdgeVectors<S>& e) {
  if (e.size() < 3) throw precondition_error("deltas need at least 3 edges");
  Deltas<S> d;
  d.values.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) d.values.push_back(mixed(e[i], e[i + 1], e[i + 2]));
  return d;
}

struct Genericity {
  bool generic = true;
  std::size_t index = 0;  // 1-based, meaningful when !generic
  degeneracy kind = degeneracy::collinear_pair;

  explicit operator bool() const { return generic; }
};

/// First violation scanning i = 1..n: the pair (v_i, v_{i+1}) is checked
/// before the triple starting at v_i.
template <Scalar S>
Genericity is_generic(const EdgeVectors<S>& e) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (cross(e[i], e[i + 1]).is_zero()) return {false, i + 1, degeneracy::collinear_pair};
    if (is_zero(mixed(e[i], e[i + 1], e[i + 2]))) return {false, i + 1, degeneracy::coplanar_triple};
  }
  return {};
}

template <Scalar S>
void require_generic(const EdgeVectors<S>& e) {
  if (const auto g = is_generic(e); !g) {
    throw non_generic(g.index, g.kind,
                      std::string("polygon is not generic: ") + to_string(g.kind) + " at index " +
                          std::to_string(g.index));
  }
}

template <Scalar S>
void require_nonzero(const Deltas<S>& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (is_zero(d[i]))
      throw non_generic(i + 1, degeneracy::coplanar_triple, "Delta_" + std::to_string(i + 1) + " is zero");
}

/// Reflection z -> -z. Negates every Delta.
inline Polygon mirror(const Polygon& p) {
  std::vector<RVec> pts;
  pts.reserve(p.size());
  for (const auto& a : p.vertices()) pts.push_back({a.x, a.y, -a.z});
  return Polygon(std::move(pts));
}

struct SignPattern {
  std::vector<int> signs;
  Parity parity = Parity::even;
  int odd_product_sign = 0;   // sign of Delta_1 Delta_3 ...
  int even_product_sign = 0;  // sign of Delta_2 Delta_4 ...
  int total_product_sign = 0;
  /// even n: the two products share a sign; odd n: the total product is positive.
  bool regularity_possible = false;
};

template <Scalar S>
SignPattern delta_sign_pattern(const Deltas<S>& d) {
  require_nonzero(d);
  SignPattern sp;
  sp.parity = parity_of(d.size());
  sp.odd_product_sign = 1;
  sp.even_product_sign = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const int s = sign(d[i]);
    sp.signs.push_back(s);
    // 0-based i even <=> 1-based index odd
    (i % 2 == 0 ? sp.odd_product_sign : sp.even_product_sign) *= s;
  }
  sp.total_product_sign = sp.odd_product_sign * sp.even_product_sign;
  sp.regularity_possible = sp.parity == Parity::even ? sp.odd_product_sign == sp.even_product_sign
                                                     : sp.total_product_sign > 0;
  return sp;
}

/// Sum over 1 <= i < j <= n-1 of cross(v_i, v_j); zero iff the closed polygon
/// can be a derived polygon. The labelling is taken as given (v_n excluded).
template <Scalar S>
Vec3<S> derivability_defect(const EdgeVectors<S>& e) {
  if (!e.closed()) throw precondition_error("derivability_defect needs closed edge vectors");
  Vec3<S> prefix;
  Vec3<S> total;
  for (std::size_t j = 0; j + 1 < e.size(); ++j) {
    total += cross(prefix, e[j]);
    prefix += e[j];
  }
  return total;
}

}  // namespace polyderive
