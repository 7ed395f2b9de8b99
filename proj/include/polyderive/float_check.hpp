#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "polyderive/serialize.hpp"

namespace polyderive {

struct FloatMismatch {
  std::string field;
  double exact = 0;
  double approx = 0;
  double scale = 0;
};

struct FloatCheck {
  bool pass = true;
  std::size_t compared = 0;
  std::vector<FloatMismatch> mismatches;

  explicit operator bool() const { return pass; }
};

namespace fp {

// Plain double arithmetic, deliberately separate from the exact templates.
using V = std::array<double, 3>;

inline V sub(const V& a, const V& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline V add(const V& a, const V& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline V scale(double s, const V& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double dot(const V& a, const V& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline V cross(const V& a, const V& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double det(const V& a, const V& b, const V& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

inline double num(const json& j) {
  return j.is_object() ? j.get<QuadExt>().to_double() : j.get<Rational>().to_double();
}
inline V vec(const json& j) { return {num(j.at(0)), num(j.at(1)), num(j.at(2))}; }
inline std::vector<V> vecs(const json& j) {
  std::vector<V> out;
  for (const auto& e : j) out.push_back(vec(e));
  return out;
}

inline double maxabs(const std::vector<V>& vs) {
  double m = 0;
  for (const auto& v : vs)
    for (double c : v) m = std::max(m, std::abs(c));
  return m;
}

inline std::vector<V> edges_of(const std::vector<V>& pts) {
  std::vector<V> e;
  for (std::size_t i = 0; i < pts.size(); ++i) e.push_back(sub(pts[(i + 1) % pts.size()], pts[i]));
  return e;
}

inline std::vector<double> deltas_of(const std::vector<V>& e) {
  std::vector<double> d;
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i) d.push_back(det(e[i], e[(i + 1) % n], e[(i + 2) % n]));
  return d;
}

class Comparator {
 public:
  Comparator(double tol, FloatCheck& out) : tol_(tol), out_(out) {}

  void scalar(const std::string& field, const json& exact, double approx, double magnitude) {
    const double e = num(exact);
    const double s = std::max({1.0, std::abs(e), std::abs(approx), magnitude});
    ++out_.compared;
    if (!(std::abs(e - approx) <= tol_ * s)) {
      out_.pass = false;
      out_.mismatches.push_back({field, e, approx, s});
    }
  }

  void scalars(const std::string& field, const json& exact, const std::vector<double>& approx, double magnitude) {
    if (!exact.is_array() || exact.size() != approx.size()) return mismatch_shape(field);
    for (std::size_t i = 0; i < approx.size(); ++i)
      scalar(field + "[" + std::to_string(i) + "]", exact[i], approx[i], magnitude);
  }

  void vector(const std::string& field, const json& exact, const V& approx, double magnitude) {
    if (!exact.is_array() || exact.size() != 3) return mismatch_shape(field);
    for (std::size_t c = 0; c < 3; ++c)
      scalar(field + "[" + std::to_string(c) + "]", exact[c], approx[c], magnitude);
  }

  void vectors(const std::string& field, const json& exact, const std::vector<V>& approx, double magnitude) {
    if (!exact.is_array() || exact.size() != approx.size()) return mismatch_shape(field);
    for (std::size_t i = 0; i < approx.size(); ++i)
      vector(field + "[" + std::to_string(i) + "]", exact[i], approx[i], magnitude);
  }

  /// An exact zero (or equality) claimed by the report must be near zero in floats.
  void claim(const std::string& field, double residual, double magnitude) {
    ++out_.compared;
    const double s = std::max(1.0, magnitude);
    if (!(std::abs(residual) <= tol_ * s)) {
      out_.pass = false;
      out_.mismatches.push_back({field, 0.0, residual, s});
    }
  }

 private:
  void mismatch_shape(const std::string& field) {
    out_.pass = false;
    out_.mismatches.push_back({field + " (shape)", 0, 0, 0});
  }

  double tol_;
  FloatCheck& out_;
};

inline void check_block(Comparator& cmp, const std::string& prefix, const json& block, const std::vector<V>& pts) {
  const std::size_t n = pts.size();
  const auto e = edges_of(pts);
  const double m = std::max(1.0, maxabs(pts));
  const double me = std::max(1.0, maxabs(e));
  cmp.vectors(prefix + ".vertices", block.at("vertices"), pts, m);
  cmp.vectors(prefix + ".edges", block.at("edges"), e, m);

  V area{0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) area = add(area, cross(pts[i], pts[(i + 1) % n]));
  cmp.vector(prefix + ".area_vector", block.at("area_vector"), area, double(n) * m * m);

  V defect{0, 0, 0};
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j) defect = add(defect, cross(e[i], e[j]));
  cmp.vector(prefix + ".derivability_defect", block.at("derivability_defect"), defect, double(n * n) * me * me);

  const auto d = deltas_of(e);
  const double md = me * me * me;
  cmp.scalars(prefix + ".deltas", block.at("deltas"), d, md);

  if (block.at("planar").at("planar").get<bool>() && n >= 4) {
    const V normal = cross(sub(pts[1], pts[0]), sub(pts[2], pts[0]));
    for (std::size_t k = 3; k < n; ++k)
      cmp.claim(prefix + ".planar", dot(normal, sub(pts[k], pts[0])), m * m * m);
  }
  if (block.value("strongly_regular", false)) {
    for (std::size_t i = 0; i < 3; ++i) cmp.claim(prefix + ".strongly_regular", d[i] - d[i + 3], md);
  }
  if (n == 6 && block.contains("two_plane") && !block["two_plane"].contains("error")) {
    const json& tp = block["two_plane"];
    const V normal = cross(sub(pts[2], pts[0]), sub(pts[4], pts[0]));
    std::vector<double> odd, even;
    for (std::size_t k = 0; k < 3; ++k) {
      odd.push_back(dot(sub(pts[2 * k], pts[0]), normal));
      even.push_back(dot(sub(pts[2 * k + 1], pts[0]), normal));
    }
    cmp.vector(prefix + ".two_plane.normal", tp.at("normal"), normal, m * m);
    cmp.scalars(prefix + ".two_plane.odd_offsets", tp.at("odd_offsets"), odd, m * m * m);
    cmp.scalars(prefix + ".two_plane.even_offsets", tp.at("even_offsets"), even, m * m * m);
    const double n2 = dot(normal, normal);
    std::vector<V> proj = pts;
    for (std::size_t k = 0; k < 3; ++k) proj[2 * k + 1] = sub(pts[2 * k + 1], scale(even[k] / n2, normal));
    V parea{0, 0, 0};
    for (std::size_t i = 0; i < 6; ++i) parea = add(parea, cross(proj[i], proj[(i + 1) % 6]));
    cmp.vector(prefix + ".two_plane.projected_area_vector", tp.at("projected_area_vector"), parea, 6 * m * m);
    if (tp.value("parallel_planes", false)) {
      cmp.claim(prefix + ".two_plane.parallel_planes", even[0] - even[1], m * m * m);
      cmp.claim(prefix + ".two_plane.parallel_planes", even[1] - even[2], m * m * m);
    }
  }
}

}  // namespace fp

/// Re-runs a check/derive/analyze report's pipeline in doubles and confirms
/// each exact value (and each exact zero or equality the report claims)
/// within `tolerance`, relative to the largest intermediate magnitude.
inline FloatCheck float_cross_validate(const json& report, double tolerance) {
  FloatCheck out;
  fp::Comparator cmp(tolerance, out);
  try {
    const auto pts = fp::vecs(report.at("input").at("vertices"));
    const std::size_t n = pts.size();
    const auto e = fp::edges_of(pts);
    const double me = std::max(1.0, fp::maxabs(e));
    cmp.vectors("input.edges", report.at("input").at("edges"), e, fp::maxabs(pts));

    if (report.contains("analysis")) fp::check_block(cmp, "analysis", report["analysis"], pts);
    if (!report.contains("deltas")) return out;

    const auto d = fp::deltas_of(e);
    cmp.scalars("deltas", report["deltas"], d, me * me * me);
    if (!report.contains("verdict")) return out;

    double odd = 1, even = 1;
    for (std::size_t i = 0; i < n; ++i) (i % 2 == 0 ? odd : even) *= d[i];
    const json& verdict = report["verdict"];
    cmp.scalar("verdict.odd_product", verdict.at("odd_product"), odd, 0);
    cmp.scalar("verdict.even_product", verdict.at("even_product"), even, 0);
    const bool even_n = n % 2 == 0;
    cmp.scalar("verdict.evidence", verdict.at("evidence"), even_n ? odd - even : odd * even,
               even_n ? std::max(std::abs(odd), std::abs(even)) : 0);
    if (verdict.contains("alpha_squared")) cmp.scalar("verdict.alpha_squared", verdict["alpha_squared"], odd / even, 0);
    if (!report.contains("basis")) return out;

    std::vector<double> c{1.0};
    for (std::size_t k = 0; k + 1 < n; ++k) c.push_back(1.0 / (c[k] * d[k]));
    std::vector<fp::V> u;
    for (std::size_t k = 0; k < n; ++k) u.push_back(fp::scale(c[k], fp::cross(e[k], e[(k + 1) % n])));
    const double mu = std::max(1.0, fp::maxabs(u));
    cmp.scalars("basis.c", report["basis"].at("c"), c, 0);
    cmp.vectors("basis.u", report["basis"].at("u"), u, 0);
    cmp.vector("closure_defect", report.at("closure_defect"), fp::sub(fp::cross(u[n - 1], u[0]), e[0]),
               mu * mu + me);
    if (!report.contains("support_system")) return out;

    const json& ss = report["support_system"];
    const double reported_alpha = fp::num(ss.at("alpha"));
    const double alpha = even_n ? reported_alpha : std::copysign(std::sqrt(odd / even), reported_alpha);
    cmp.scalar("support_system.alpha", ss["alpha"], alpha, 0);
    std::vector<fp::V> up;
    for (std::size_t k = 0; k < n; ++k) up.push_back(fp::scale(k % 2 == 1 ? alpha : 1.0 / alpha, u[k]));
    const double mup = std::max(1.0, fp::maxabs(up));
    cmp.vectors("support_system.uprime", ss.at("uprime"), up, mup);
    if (ss.value("verified", false)) {
      for (std::size_t i = 0; i < n; ++i) {
        const fp::V r = fp::sub(fp::cross(up[i], up[(i + 1) % n]), e[(i + 1) % n]);
        for (double x : r) cmp.claim("support_system.verified", x, mup * mup + me);
      }
    }
    if (report.contains("derived")) fp::check_block(cmp, "derived", report["derived"], up);
  } catch (const std::exception& ex) {
    out.pass = false;
    out.mismatches.push_back({std::string("report structure: ") + ex.what(), 0, 0, 0});
  }
  return out;
}

}  // namespace polyderive
