#pragma once

#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polyderive/generators.hpp"
#include "polyderive/oracle.hpp"
#include "polyderive/serialize.hpp"

namespace polyderive {

inline json genericity_json(const Genericity& g) {
  if (g.generic) return json{{"generic", true}};
  return json{{"generic", false}, {"index", g.index}, {"kind", to_string(g.kind)}};
}

inline json sign_pattern_json(const SignPattern& sp) {
  json j{{"signs", sp.signs}, {"parity", to_string(sp.parity)}, {"regularity_possible", sp.regularity_possible}};
  if (sp.parity == Parity::even) {
    j["odd_product_sign"] = sp.odd_product_sign;
    j["even_product_sign"] = sp.even_product_sign;
  } else {
    j["total_product_sign"] = sp.total_product_sign;
  }
  return j;
}

template <Scalar S>
json verdict_json(const RegularityVerdict<S>& v) {
  json j{{"regular", v.regular},
         {"parity", to_string(v.parity)},
         {"evidence", v.evidence},
         {"odd_product", v.odd_product},
         {"even_product", v.even_product}};
  if (v.alpha_squared) j["alpha_squared"] = *v.alpha_squared;
  return j;
}

template <Scalar S>
json plane_decomposition_json(const PlaneDecomposition<S>& pd) {
  return json{{"normal", pd.normal},
              {"odd_offsets", pd.odd_offsets},
              {"even_offsets", pd.even_offsets},
              {"projected_even", pd.projected_even},
              {"projected_area_vector", pd.projected_area_vector},
              {"parallel_planes", pd.parallel_planes},
              {"holds", pd.holds()}};
}

/// Structural analysis of a closed polygon given by its vertices: planarity,
/// area vector, derivability defect, Deltas, plus quadrangle and hexagon extras.
template <Scalar S>
json analysis_block(const std::vector<Vec3<S>>& vertices) {
  const auto poly = derived_from_points(vertices);
  const std::size_t n = poly.size();
  json j;
  j["n"] = n;
  j["vertices"] = poly.vertices;
  j["edges"] = poly.edges.vectors;
  json notes = json::array();

  const auto planar = is_planar(poly);
  j["planar"] = json{{"planar", planar.planar}};
  if (!planar) j["planar"]["witness"] = planar.witness;
  if (n < 4) notes.push_back("triangle: planar trivially");
  j["area_vector"] = area_vector(poly.vertices);
  j["derivability_defect"] = derivability_defect(poly.edges);

  const auto gen = is_generic(poly.edges);
  const auto d = deltas(poly.edges);
  j["genericity"] = genericity_json(gen);
  j["deltas"] = d.values;
  if (gen) j["verdict"] = verdict_json(check_regularity(d));

  if (n == 4 && planar) {
    try {
      j["self_intersecting"] = planar_self_intersection(poly);
    } catch (const precondition_error& e) {
      notes.push_back(std::string("self-intersection undefined: ") + e.what());
    }
  }
  if (n == 6) {
    if (gen) {
      const bool sr = strongly_regular_check(d);
      j["strongly_regular"] = sr;
      if (sr) j["type"] = hex_type(d).triple;
    }
    try {
      j["two_plane"] = plane_decomposition_json(two_plane_decomposition(poly));
    } catch (const non_generic& e) {
      j["two_plane"] = json{{"error", e.what()}};
    }
  }
  j["notes"] = notes;
  return j;
}

/// Input summary, genericity, Deltas, sign pattern and verdict.
inline json check_report(const Polygon& p) {
  const auto e = edge_vectors(p);
  const auto d = deltas(e);
  const auto gen = is_generic(e);
  json r;
  r["command"] = "check";
  r["input"] = json{{"n", p.size()}, {"vertices", p.vertices()}, {"edges", e.vectors}};
  r["genericity"] = genericity_json(gen);
  r["deltas"] = d.values;
  if (!gen) {
    r["status"] = "non_generic";
    r["diagnostics"] = json::array({std::string("not generic: ") + to_string(gen.kind) + " at index " +
                                    std::to_string(gen.index)});
    return r;
  }
  r["sign_pattern"] = sign_pattern_json(delta_sign_pattern(d));
  r["verdict"] = verdict_json(check_regularity(d));
  r["status"] = "ok";
  return r;
}

struct DeriveOptions {
  std::optional<Rational> alpha;  // required for even n; optional rational root for odd n
  bool negative_root = false;     // odd n without alpha: use -sqrt(alpha^2)
};

namespace detail {

inline std::string failed_condition(const RegularityVerdict<Rational>& v) {
  std::ostringstream os;
  if (v.parity == Parity::even) {
    os << "not regular: Delta_1*Delta_3*...*Delta_{n-1} = " << v.odd_product
       << " differs from Delta_2*Delta_4*...*Delta_n = " << v.even_product;
  } else {
    os << "not regular: Delta_1*...*Delta_n = " << v.evidence << " is not positive (odd-index product "
       << v.odd_product << ", even-index product " << v.even_product << ")";
  }
  return os.str();
}

template <Scalar A>
void attach_support(json& r, const SupportSystem<A>& s, const EdgeVectors<Rational>& e) {
  const auto check = verify_support(s, e);
  r["support_system"] =
      json{{"alpha", s.alpha}, {"parity", to_string(s.parity)}, {"uprime", s.vectors}, {"verified", check.ok}};
  if (!check) r["support_system"]["failures"] = check.failures;
  r["derived"] = analysis_block(derive(s).vertices);
}

}  // namespace detail

/// Support system and derived polygon with full analysis. status is
/// "ok", "non_generic" or "not_regular". Throws precondition_error for an
/// even polygon without alpha or an odd one with a wrong alpha.
inline json derive_report(const Polygon& p, const DeriveOptions& opts) {
  json r = check_report(p);
  r["command"] = "derive";
  if (r["status"] != "ok") return r;
  const auto e = edge_vectors(p);
  const auto d = deltas(e);
  const auto verdict = check_regularity(d);
  if (!verdict.regular) {
    r["status"] = "not_regular";
    r["error"] = detail::failed_condition(verdict);
    return r;
  }
  const auto basis = support_basis(e, d);
  r["basis"] = json{{"u", basis.vectors}, {"c", basis.coefficients}};
  r["closure_defect"] = closure_defect(basis, e);

  if (verdict.parity == Parity::even) {
    if (!opts.alpha) throw precondition_error("even polygons need an explicit alpha (--alpha p/q)");
    detail::attach_support(r, support_system(basis, verdict, *opts.alpha), e);
  } else if (opts.alpha) {
    const Rational alpha = opts.negative_root ? -*opts.alpha : *opts.alpha;
    detail::attach_support(r, support_system(basis, verdict, alpha), e);
  } else {
    detail::attach_support(r, support_system(basis, verdict, canonical_alpha(verdict, opts.negative_root)), e);
  }

  json notes = json::array();
  if (p.size() == 6 && strongly_regular_check(d) && r["derived"].value("strongly_regular", false)) {
    const json input_type = hex_type(d).triple;
    r["input_type"] = input_type;
    notes.push_back(input_type == r["derived"]["type"] ? "input and derived hexagon have the same type"
                                                       : "input and derived hexagon have different types");
  }
  r["notes"] = notes;
  r["status"] = "ok";
  return r;
}

/// Treats the polygon itself as a candidate derived polygon.
inline json analyze_report(const Polygon& p) {
  json r;
  r["command"] = "analyze";
  r["input"] = json{{"n", p.size()}, {"vertices", p.vertices()}, {"edges", edge_vectors(p).vectors}};
  r["analysis"] = analysis_block(p.vertices());
  r["status"] = "ok";
  return r;
}

enum class FixtureKind { quad, pentagon, hexagon_lift, alt_sign };

inline std::optional<FixtureKind> fixture_kind_from_string(const std::string& s) {
  if (s == "quad") return FixtureKind::quad;
  if (s == "pentagon") return FixtureKind::pentagon;
  if (s == "hexagon-lift") return FixtureKind::hexagon_lift;
  if (s == "alt-sign") return FixtureKind::alt_sign;
  return std::nullopt;
}

inline const char* to_string(FixtureKind k) {
  switch (k) {
    case FixtureKind::quad: return "quad";
    case FixtureKind::pentagon: return "pentagon";
    case FixtureKind::hexagon_lift: return "hexagon-lift";
    case FixtureKind::alt_sign: return "alt-sign";
  }
  return "?";
}

/// Fixture document; the generating seed and bound are embedded.
inline json fixture_json(FixtureKind kind, const GenConfig& cfg) {
  json j{{"kind", to_string(kind)}, {"seed", cfg.seed}, {"bound", cfg.coordinate_bound}};
  switch (kind) {
    case FixtureKind::quad:
      j["vertices"] = random_generic_polygon(4, cfg).vertices();
      break;
    case FixtureKind::pentagon: {
      const Polygon p = random_regular_pentagon(cfg);
      j["vertices"] = p.vertices();
      j["alpha_squared"] = *check_regularity(deltas(edge_vectors(p))).alpha_squared;
      break;
    }
    case FixtureKind::hexagon_lift: {
      const auto lifted = regular_hexagon_via_lift(cfg);
      j["vertices"] = lifted.polygon.vertices();
      j["apex_height"] = lifted.apex_height;
      j["support_system"] = json{{"alpha", lifted.support.alpha},
                                 {"parity", to_string(lifted.support.parity)},
                                 {"uprime", lifted.support.vectors}};
      break;
    }
    case FixtureKind::alt_sign: {
      const Polygon p = alternating_sign_hexagon(cfg);
      j["vertices"] = p.vertices();
      j["signs"] = delta_sign_pattern(deltas(edge_vectors(p))).signs;
      break;
    }
  }
  return j;
}

namespace detail {

/// Rational string/integer or quadratic object -> double.
inline double approx(const json& j) { return j.is_object() ? j.get<QuadExt>().to_double() : j.get<Rational>().to_double(); }

}  // namespace detail

/// Line-based plot data: "v i x y z [plane=1|2]" and "e i j", with "#" headers.
/// Accepts a polygon document, a derive report, or an analyze report.
inline std::string plot_data(const json& doc) {
  json block;
  std::string source;
  if (doc.contains("derived")) {
    block = doc["derived"];
    source = "derived";
  } else if (doc.contains("analysis")) {
    block = doc["analysis"];
    source = "analysis";
  } else {
    block = analysis_block(polygon_from_json(doc).vertices());
    source = "polygon";
  }
  const json& verts = block.at("vertices");
  const std::size_t n = verts.size();
  const bool planar = block.at("planar").at("planar").get<bool>();
  const bool two_plane = block.contains("two_plane") && block["two_plane"].value("holds", false);

  std::ostringstream os;
  os << std::setprecision(17);
  os << "# polyderive plot data\n";
  os << "# source " << source << "\n";
  os << "# n " << n << "\n";
  os << "# planar " << (planar ? "true" : "false") << "\n";
  if (block.contains("two_plane")) os << "# two_plane " << (two_plane ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << "v " << i + 1;
    for (const auto& c : verts[i]) os << ' ' << detail::approx(c);
    if (two_plane) os << " plane=" << (i % 2 == 0 ? 1 : 2);
    os << "\n";
  }
  for (std::size_t i = 0; i < n; ++i) os << "e " << i + 1 << ' ' << (i + 1) % n + 1 << "\n";
  return os.str();
}

}  // namespace polyderive
