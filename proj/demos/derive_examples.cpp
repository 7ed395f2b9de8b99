// Walks a quadrangle and a pentagon through regularity, support system and
// derivative, printing the exact results.

#include <iostream>

#include "polyderive/polyderive.hpp"

using namespace polyderive;

int main() {
  const Polygon quad({RVec{0, 0, 0}, RVec{1, 1, 2}, RVec{2, 3, 1}, RVec{-1, 2, -2}});
  const auto e = edge_vectors(quad);
  const auto d = deltas(e);
  const auto verdict = check_regularity(d);
  std::cout << "quadrangle deltas:";
  for (const auto& x : d.values) std::cout << ' ' << x;
  std::cout << "\nregular: " << std::boolalpha << verdict.regular << "\n";

  const auto s = support_system(support_basis(e, d), verdict, Rational(1));
  for (std::size_t i = 0; i < s.vectors.size(); ++i) std::cout << "u" << i + 1 << " = " << s.vectors[i] << "\n";
  const auto derived = derive(s);
  std::cout << "derived planar: " << bool(is_planar(derived)) << ", area vector " << area_vector(derived.vertices)
            << ", self-intersecting: " << planar_self_intersection(derived) << "\n";

  GenConfig cfg;
  cfg.seed = 7;
  const Polygon pent = random_regular_pentagon(cfg);
  const auto pe = edge_vectors(pent);
  const auto pv = check_regularity(deltas(pe));
  std::cout << "\npentagon alpha^2 = " << *pv.alpha_squared << "\n";
  const auto ps = support_system(support_basis(pe), pv, canonical_alpha(pv));
  const auto pd = derive(ps);
  std::cout << "alpha = " << ps.alpha << "\n";
  for (std::size_t i = 0; i < pd.vertices.size(); ++i) std::cout << "B" << i + 1 << " = " << pd.vertices[i] << "\n";
  std::cout << "planar: " << bool(is_planar(pd)) << ", area vector " << area_vector(pd.vertices) << "\n";
}
