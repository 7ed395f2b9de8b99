#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyderive/derived.hpp"

namespace polyderive {

struct GenConfig {
  std::uint64_t seed = 1;
  int coordinate_bound = 5;  // numerators in [-bound, bound], denominators in [1, bound]
  int max_rejections = 10000;

  void validate() const {
    if (coordinate_bound < 2) throw precondition_error("coordinate bound must be at least 2");
    if (max_rejections < 1) throw precondition_error("max_rejections must be at least 1");
  }
};

/// splitmix64 finalizer; used to derive independent per-sample seeds.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seeded source of bounded integers and rationals. Draws only raw
/// mt19937_64 output (fully specified by the standard), so sequences are
/// identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % range);
  }

  Rational rational(int bound) {
    const auto num = uniform(-bound, bound);
    const auto den = uniform(1, bound);
    return Rational::from_fraction(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  }

  RVec vec(int bound) {
    RVec v;
    v.x = rational(bound);
    v.y = rational(bound);
    v.z = rational(bound);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

[[noreturn]] inline void exhausted(const std::string& what, const GenConfig& cfg) {
  throw budget_exhausted(what + ": rejection budget of " + std::to_string(cfg.max_rejections) +
                         " exhausted (seed " + std::to_string(cfg.seed) + ", bound " +
                         std::to_string(cfg.coordinate_bound) + "); try a larger --bound");
}

inline Polygon sample_polygon(std::size_t n, Sampler& rng, int bound) {
  std::vector<RVec> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back(rng.vec(bound));
  return Polygon(std::move(pts));
}

inline std::array<RVec, 6> sample_zero_area_hexagon(Sampler& rng, int bound) {
  for (;;) {
    std::array<RVec, 6> p;
    for (std::size_t i = 0; i < 5; ++i) {
      p[i].x = rng.rational(bound);
      p[i].y = rng.rational(bound);
    }
    // z of the cyclic cross-sum: partial + x6 (y1 - y5) + y6 (x5 - x1) = 0.
    Rational partial;
    for (std::size_t i = 0; i < 4; ++i) partial += p[i].x * p[i + 1].y - p[i + 1].x * p[i].y;
    const Rational dy = p[0].y - p[4].y;
    const Rational dx = p[4].x - p[0].x;
    if (!dx.is_zero()) {
      p[5].x = rng.rational(bound);
      p[5].y = -(partial + p[5].x * dy) / dx;
    } else if (!dy.is_zero()) {
      p[5].y = rng.rational(bound);
      p[5].x = -(partial + p[5].y * dx) / dy;
    } else {
      continue;  // B_1 == B_5 in the plane: the condition does not involve B_6
    }
    return p;
  }
}

}  // namespace detail

/// Generic n-gon (n >= 4) by rejection sampling.
inline Polygon random_generic_polygon(std::size_t n, const GenConfig& cfg) {
  cfg.validate();
  if (n < 4) throw precondition_error("generic polygons need n >= 4");
  Sampler rng(cfg.seed);
  for (int attempt = 0; attempt < cfg.max_rejections; ++attempt) {
    Polygon p = detail::sample_polygon(n, rng, cfg.coordinate_bound);
    if (is_generic(edge_vectors(p))) return p;
  }
  detail::exhausted("random_generic_polygon", cfg);
}

/// Generic pentagon with positive Delta product (mirrored when needed).
inline Polygon random_regular_pentagon(const GenConfig& cfg) {
  Polygon p = random_generic_polygon(5, cfg);
  if (delta_sign_pattern(deltas(edge_vectors(p))).total_product_sign < 0) p = mirror(p);
  return p;
}

/// Six points in z = 0 whose cyclic cross-sum vanishes.
inline std::array<RVec, 6> zero_area_planar_hexagon(const GenConfig& cfg) {
  cfg.validate();
  Sampler rng(cfg.seed);
  return detail::sample_zero_area_hexagon(rng, cfg.coordinate_bound);
}

struct LiftedHexagon {
  Polygon polygon;
  SupportSystem<Rational> support;
  Rational apex_height;
};

/// Regular hexagon from a zero-area planar hexagon: even vertices lifted to
/// z = 1, apex O = (0, 0, h), u_i = B_i - O and v_{i+1} = cross(u_i, u_{i+1}).
/// Rejects samples whose polygon or derived hexagon is degenerate.
inline LiftedHexagon regular_hexagon_via_lift(const GenConfig& cfg) {
  cfg.validate();
  Sampler rng(cfg.seed);
  for (int attempt = 0; attempt < cfg.max_rejections; ++attempt) {
    auto b = detail::sample_zero_area_hexagon(rng, cfg.coordinate_bound);
    const Rational h = rng.rational(cfg.coordinate_bound);
    std::vector<RVec> u;
    u.reserve(6);
    for (std::size_t i = 0; i < 6; ++i) {
      b[i].z = i % 2 == 1 ? Rational(1) : Rational(0);
      u.push_back(b[i] - RVec{0, 0, h});
    }
    EdgeVectors<Rational> e;
    for (std::size_t k = 0; k < 6; ++k) e.vectors.push_back(cross(u[(k + 5) % 6], u[k]));
    if (!e.closed()) throw std::logic_error("lift construction produced an open polygon");
    if (!is_generic(e)) continue;
    const auto derived = derived_from_points(u);
    if (!is_generic(derived.edges)) continue;
    if (cross(u[2] - u[0], u[4] - u[0]).is_zero()) continue;
    SupportSystem<Rational> s{std::move(u), Rational(1), Parity::even};
    if (!verify_support(s, e)) throw std::logic_error("lift construction produced an invalid support system");
    return {polygon_from_edges(e), std::move(s), h};
  }
  detail::exhausted("regular_hexagon_via_lift", cfg);
}

/// Generic hexagon with Delta signs +,-,+,-,+,- (irregular by the sign test).
inline Polygon alternating_sign_hexagon(const GenConfig& cfg) {
  cfg.validate();
  Sampler rng(cfg.seed);
  for (int attempt = 0; attempt < cfg.max_rejections; ++attempt) {
    Polygon p = detail::sample_polygon(6, rng, cfg.coordinate_bound);
    const auto e = edge_vectors(p);
    if (!is_generic(e)) continue;
    const auto signs = delta_sign_pattern(deltas(e)).signs;
    bool alternating = true;
    for (std::size_t i = 1; i < 6; ++i) alternating = alternating && signs[i] == -signs[i - 1];
    if (!alternating) continue;
    return signs[0] > 0 ? p : mirror(p);
  }
  detail::exhausted("alternating_sign_hexagon", cfg);
}

}  // namespace polyderive
