#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyderive/report.hpp"

namespace polyderive {

struct SuiteResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<json> counterexample;  // first failure
  double seconds = 0;

  bool ok() const { return failed == 0 && passed == samples; }
};

inline json suite_result_json(const SuiteResult& r) {
  json j{{"suite", r.name}, {"samples", r.samples}, {"passed", r.passed}, {"failed", r.failed},
         {"ok", r.ok()}, {"seconds", r.seconds}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

/// Nonzero alphas cycled through the even-n suites.
inline const std::array<Rational, 5>& sample_alphas() {
  static const std::array<Rational, 5> alphas{Rational(1), Rational(2), Rational(-3),
                                              Rational::from_fraction(1, 2), Rational::from_fraction(7, 5)};
  return alphas;
}

/// The four alphas used by the hexagon suites.
inline std::array<Rational, 4> hexagon_alphas() {
  return {Rational(1), Rational(2), Rational(-3), Rational::from_fraction(1, 2)};
}

namespace detail {

/// A sample returns an empty string on success, or the name of the failed check.
using SampleFn = std::function<std::string(std::uint64_t seed, json& payload)>;

inline SuiteResult run_samples(const std::string& name, std::size_t samples, std::uint64_t seed, const SampleFn& fn) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r{name, samples, 0, 0, std::nullopt, 0};
  for (std::size_t i = 0; i < samples; ++i) {
    const std::uint64_t sample_seed = mix_seed(seed, i);
    json payload;
    std::string failure;
    try {
      failure = fn(sample_seed, payload);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) {
      ++r.passed;
    } else {
      ++r.failed;
      if (!r.counterexample) {
        payload["sample"] = i;
        payload["seed"] = sample_seed;
        payload["check"] = failure;
        r.counterexample = payload;
      }
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline GenConfig sample_config(std::uint64_t seed) {
  GenConfig cfg;
  cfg.seed = seed;
  return cfg;
}

}  // namespace detail

/// Quadrangles: Delta_2 = -Delta_1, Delta_3 = Delta_1, Delta_4 = -Delta_1; every
/// derivative planar, zero area, self-intersecting.
inline SuiteResult run_quadrangle_suite(std::size_t samples, std::uint64_t seed) {
  return detail::run_samples("thm31", samples, seed, [](std::uint64_t s, json& payload) -> std::string {
    const Polygon p = random_generic_polygon(4, detail::sample_config(s));
    payload["vertices"] = p.vertices();
    const auto e = edge_vectors(p);
    const auto d = deltas(e);
    if (!(d[1] == -d[0] && d[2] == d[0] && d[3] == -d[0])) return "delta relations";
    const auto verdict = check_regularity(d);
    if (!verdict.regular) return "regularity";
    const auto& alpha = sample_alphas()[s % sample_alphas().size()];
    payload["alpha"] = alpha;
    const auto s_sys = support_system(support_basis(e, d), verdict, alpha);
    if (!verify_support(s_sys, e)) return "support system";
    const auto derived = derive(s_sys);
    if (!is_planar(derived)) return "planarity";
    if (!area_vector(derived.vertices).is_zero()) return "zero area";
    if (!planar_self_intersection(derived)) return "self-intersection";
    return {};
  });
}

/// Regular pentagons: derivative planar with zero area in Q(sqrt(alpha^2)).
inline SuiteResult run_pentagon_suite(std::size_t samples, std::uint64_t seed) {
  return detail::run_samples("thm41", samples, seed, [](std::uint64_t s, json& payload) -> std::string {
    const Polygon p = random_regular_pentagon(detail::sample_config(s));
    payload["vertices"] = p.vertices();
    const auto e = edge_vectors(p);
    const auto d = deltas(e);
    const auto verdict = check_regularity(d);
    if (!verdict.regular) return "regularity";
    const QuadExt alpha = canonical_alpha(verdict, s % 2 == 1);
    payload["alpha"] = alpha;
    const auto s_sys = support_system(support_basis(e, d), verdict, alpha);
    if (!verify_support(s_sys, e)) return "support system";
    const auto derived = derive(s_sys);
    if (!is_planar(derived)) return "planarity";
    if (!area_vector(derived.vertices).is_zero()) return "zero area";
    return {};
  });
}

/// Lift hexagons: derivatives strongly regular with an alpha-independent type.
inline SuiteResult run_hexagon_type_suite(std::size_t samples, std::uint64_t seed) {
  return detail::run_samples("thm51", samples, seed, [](std::uint64_t s, json& payload) -> std::string {
    const auto lifted = regular_hexagon_via_lift(detail::sample_config(s));
    payload["vertices"] = lifted.polygon.vertices();
    const auto e = edge_vectors(lifted.polygon);
    std::optional<HexType<Rational>> first;
    for (const auto& alpha : hexagon_alphas()) {
      payload["alpha"] = alpha;
      const auto d1 = deltas(derive_with_alpha(e, alpha).edges);
      require_nonzero(d1);
      if (!strongly_regular_check(d1)) return "strongly regular";
      const auto t = hex_type(d1);
      if (!first) first = t;
      else if (!(t == *first)) return "type independent of alpha";
    }
    return {};
  });
}

/// Lift hexagons: type(P'') = type(P') and the three shift-ratio relations.
inline SuiteResult run_second_derivative_suite(std::size_t samples, std::uint64_t seed) {
  return detail::run_samples("thm52", samples, seed, [](std::uint64_t s, json& payload) -> std::string {
    const auto lifted = regular_hexagon_via_lift(detail::sample_config(s));
    payload["vertices"] = lifted.polygon.vertices();
    const auto e = edge_vectors(lifted.polygon);
    const auto alphas = hexagon_alphas();
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      const auto& a1 = alphas[i];
      const auto& a2 = alphas[(i + 1 + s % 3) % alphas.size()];
      payload["alpha1"] = a1;
      payload["alpha2"] = a2;
      const auto sd = second_derivative_type(e, a1, a2);
      if (!sd.types_equal()) return "type(P'') == type(P')";
      if (!sd.shift_relations_hold()) return "shift relations";
    }
    return {};
  });
}

/// Lift hexagons: odd vertices in one plane, even ones in a parallel plane,
/// zero projected area; the derivative has zero derivability defect.
inline SuiteResult run_two_plane_suite(std::size_t samples, std::uint64_t seed) {
  return detail::run_samples("sec6", samples, seed, [](std::uint64_t s, json& payload) -> std::string {
    const auto lifted = regular_hexagon_via_lift(detail::sample_config(s));
    payload["vertices"] = lifted.polygon.vertices();
    const auto e = edge_vectors(lifted.polygon);
    for (const auto& alpha : hexagon_alphas()) {
      payload["alpha"] = alpha;
      const auto derived = derive_with_alpha(e, alpha);
      const auto pd = two_plane_decomposition(derived);
      if (!pd.parallel_planes) return "equal even offsets";
      if (!pd.projected_area_vector.is_zero()) return "zero projected area";
      if (!derivability_defect(derived.edges).is_zero()) return "derivability defect";
    }
    return {};
  });
}

/// cross(cross(a,b), cross(b,c)) = mixed(a,b,c) b on random triples.
inline SuiteResult run_double_cross_suite(std::size_t samples, std::uint64_t seed) {
  return detail::run_samples("eq2", samples, seed, [](std::uint64_t s, json& payload) -> std::string {
    Sampler rng(s);
    const RVec a = rng.vec(9), b = rng.vec(9), c = rng.vec(9);
    payload["triple"] = json::array({a, b, c});
    const auto [lhs, rhs] = double_cross_identity(a, b, c);
    return lhs == rhs ? "" : "identity";
  });
}

/// Delta_1 Delta_3 Delta_5 = Delta_2 Delta_4 Delta_6 for the support matrix of
/// random sextuples; degenerate draws are redrawn.
inline SuiteResult run_auto_identity_suite(std::size_t samples, std::uint64_t seed) {
  return detail::run_samples("auto-id", samples, seed, [](std::uint64_t s, json& payload) -> std::string {
    Sampler rng(s);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      Sextuple<Rational> u;
      for (auto& x : u) x = rng.vec(9);
      const auto check = auto_identity_check(u);
      if (check.degenerate) continue;
      payload["u"] = u;
      return check.holds() ? "" : "identity";
    }
    return "no non-degenerate sextuple drawn";
  });
}

/// Both first-degree relations vanish for closing sextuples from the lift.
inline SuiteResult run_first_degree_suite(std::size_t samples, std::uint64_t seed) {
  return detail::run_samples("eq4", samples, seed, [](std::uint64_t s, json& payload) -> std::string {
    const auto lifted = regular_hexagon_via_lift(detail::sample_config(s));
    const auto u = to_sextuple(lifted.support.vectors);
    payload["u"] = u;
    if (!support_closure_defect(u).is_zero()) return "closure";
    const auto [first, second] = first_degree_relations(u);
    if (!is_zero(first)) return "first relation";
    if (!is_zero(second)) return "second relation";
    return {};
  });
}

/// Alternating-sign hexagons are never regular.
inline SuiteResult run_alternating_sign_suite(std::size_t samples, std::uint64_t seed) {
  return detail::run_samples("alt-sign", samples, seed, [](std::uint64_t s, json& payload) -> std::string {
    const Polygon p = alternating_sign_hexagon(detail::sample_config(s));
    payload["vertices"] = p.vertices();
    const auto d = deltas(edge_vectors(p));
    const auto sp = delta_sign_pattern(d);
    for (std::size_t i = 0; i < 6; ++i)
      if (sp.signs[i] != (i % 2 == 0 ? 1 : -1)) return "sign pattern";
    return check_regularity(d).regular ? "regularity" : "";
  });
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm31", "thm41", "thm51", "thm52", "sec6",
                                              "eq2",   "auto-id", "eq4", "alt-sign"};
  return names;
}

/// Throws precondition_error for an unknown name.
inline SuiteResult run_suite(const std::string& name, std::size_t samples, std::uint64_t seed) {
  if (name == "thm31") return run_quadrangle_suite(samples, seed);
  if (name == "thm41") return run_pentagon_suite(samples, seed);
  if (name == "thm51") return run_hexagon_type_suite(samples, seed);
  if (name == "thm52") return run_second_derivative_suite(samples, seed);
  if (name == "sec6") return run_two_plane_suite(samples, seed);
  if (name == "eq2") return run_double_cross_suite(samples, seed);
  if (name == "auto-id") return run_auto_identity_suite(samples, seed);
  if (name == "eq4") return run_first_degree_suite(samples, seed);
  if (name == "alt-sign") return run_alternating_sign_suite(samples, seed);
  throw precondition_error("unknown suite: " + name);
}

}  // namespace polyderive
