#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>
#include "polyderive/polygon.hpp"

namespace polyderive {

using json = nlohmann::json;

// Rational: "p/q", or "p" when q = 1. Input also takes JSON integers and
// decimal strings.
inline void to_json(json& j, const Rational& r) { j = r.to_string(); }

inline void from_json(const json& j, Rational& r) {
  if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = j.is_number_unsigned() ? Rational(j.get<unsigned long>()) : Rational(j.get<long>());
  } else if (j.is_number_float()) {
    throw parse_error("non-integer JSON number " + j.dump() + "; write it as a string (\"p/q\" or \"x.y\")");
  } else {
    throw parse_error("expected a number, got " + j.dump());
  }
}

// QuadExt: {"a": "p/q", "b": "p/q", "d": "p/q"}; d is null for a value that
// never met a radicand.
inline void to_json(json& j, const QuadExt& x) {
  j = json{{"a", x.a()}, {"b", x.b()}, {"d", nullptr}};
  if (x.radicand()) j["d"] = *x.radicand();
}

inline void from_json(const json& j, QuadExt& x) {
  if (!j.is_object()) {
    x = QuadExt(j.get<Rational>());
    return;
  }
  const Rational a = j.at("a").get<Rational>();
  const Rational b = j.contains("b") ? j.at("b").get<Rational>() : Rational{};
  if (!j.contains("d") || j.at("d").is_null()) {
    if (!b.is_zero()) throw parse_error("quadratic value with nonzero b needs a radicand d");
    x = QuadExt(a);
  } else {
    x = QuadExt(a, b, j.at("d").get<Rational>());
  }
}

template <Scalar S>
void to_json(json& j, const Vec3<S>& v) {
  j = json::array({v.x, v.y, v.z});
}

template <Scalar S>
void from_json(const json& j, Vec3<S>& v) {
  if (!j.is_array() || j.size() != 3) throw parse_error("expected a 3-element coordinate array, got " + j.dump());
  v.x = j[0].get<S>();
  v.y = j[1].get<S>();
  v.z = j[2].get<S>();
}

template <Scalar S>
json to_json_list(const std::vector<S>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

/// Polygon document: {"vertices": [[x,y,z], ...]} or {"edges": [[x,y,z], ...]}
/// (edges must close; vertices then start at the origin).
inline Polygon polygon_from_json(const json& doc) {
  if (!doc.is_object()) throw parse_error("polygon document must be a JSON object");
  if (doc.contains("vertices")) return Polygon(doc.at("vertices").get<std::vector<RVec>>());
  if (doc.contains("edges")) {
    EdgeVectors<Rational> e{doc.at("edges").get<std::vector<RVec>>()};
    if (e.size() < 3) throw parse_error("a polygon needs at least 3 edges");
    if (!e.closed()) throw parse_error("edge vectors in \"edges\" do not sum to zero");
    return polygon_from_edges(e);
  }
  throw parse_error("polygon document needs a \"vertices\" or \"edges\" array");
}

inline json polygon_to_json(const Polygon& p) { return json{{"vertices", p.vertices()}}; }

/// Parses JSON text, reporting the 1-based line of a syntax error.
inline json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    const std::size_t end = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i)
      if (text[i] == '\n') ++line;
    throw parse_error(std::string("malformed JSON: ") + e.what(), line);
  }
}

}  // namespace polyderive
