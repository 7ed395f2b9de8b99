#include <gtest/gtest.h>

#include "polyderive/derived.hpp"
#include "polyderive/generators.hpp"

using namespace polyderive;

namespace {

Rational frac(long p, long q) { return Rational::from_fraction(p, q); }

EdgeVectors<Rational> edges(std::vector<RVec> v) { return EdgeVectors<Rational>{std::move(v)}; }

EdgeVectors<Rational> worked_quadrangle() { return edges({{1, 1, 2}, {1, 2, -1}, {-3, -1, -3}, {1, -2, 2}}); }
EdgeVectors<Rational> regular_hexagon() {
  return edges({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, -1, 3}, {-1, 5, 2}, {-2, -5, -6}});
}
EdgeVectors<Rational> strong_hexagon() {
  return edges({{1, 0, 0},
                {0, 1, 0},
                {0, 0, 1},
                {2, -1, 3},
                {frac(-3, 2), frac(-1, 2), frac(-3, 2)},
                {frac(-3, 2), frac(1, 2), frac(-5, 2)}});
}

Deltas<Rational> dl(std::vector<Rational> v) { return Deltas<Rational>{std::move(v)}; }

}  // namespace

TEST(Derived, RegularHexagonEdges) {
  const auto p = derive_with_alpha(regular_hexagon(), Rational(1));
  // y of the third edge is -23/9, from u_4 - u_3 directly
  EXPECT_EQ(p.edges.vectors, (std::vector<RVec>{{1, 0, -1},
                                          {frac(-1, 2), 1, 0},
                                          {frac(-77, 18), frac(-23, 9), 2},
                                          {frac(-20, 9), frac(-13, 9), frac(5, 2)},
                                          {6, 4, frac(-16, 3)},
                                          {0, -1, frac(11, 6)}}));
  EXPECT_TRUE(p.edges.closed());
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(p.edges[i], p.vertices[(i + 1) % 6] - p.vertices[i]);
}

TEST(Derived, StrongHexagonEdges) {
  const auto p = derive_with_alpha(strong_hexagon(), Rational(1));
  EXPECT_EQ(p.vertices, (std::vector<RVec>{{0, 0, 1},
                                           {1, 0, 0},
                                           {frac(1, 2), 1, 0},
                                           {frac(-12, 5), frac(6, 5), 2},
                                           {frac(-5, 2), frac(15, 8), frac(15, 8)},
                                           {0, 1, frac(1, 5)}}));
  EXPECT_EQ(p.edges.vectors, (std::vector<RVec>{{1, 0, -1},
                                          {frac(-1, 2), 1, 0},
                                          {frac(-29, 10), frac(1, 5), 2},
                                          {frac(-1, 10), frac(27, 40), frac(-1, 8)},
                                          {frac(5, 2), frac(-7, 8), frac(-67, 40)},
                                          {0, -1, frac(4, 5)}}));
}

TEST(Derived, AlphaOneVerticesAreBasis) {
  const auto e = worked_quadrangle();
  EXPECT_EQ(derive_with_alpha(e, Rational(1)).vertices, support_basis(e).vectors);
}

TEST(Derived, PlanarityExamples) {
  const auto quad = derive_with_alpha(worked_quadrangle(), Rational(1));
  EXPECT_TRUE(is_planar(quad).planar);
  const auto hex = derive_with_alpha(regular_hexagon(), Rational(1));
  const auto pl = is_planar(hex);
  EXPECT_FALSE(pl.planar);
  EXPECT_GE(pl.witness, 4u);
  EXPECT_TRUE(is_planar(std::vector<RVec>{{0, 0, 0}, {1, 2, 3}, {4, 5, 7}}).planar);
}

TEST(Derived, DerivedDeltaExamples) {
  const auto d51 = derived_deltas(derive_with_alpha(regular_hexagon(), Rational(1)));
  EXPECT_TRUE(d51.generic);
  EXPECT_EQ(d51.deltas.values, (std::vector<Rational>{frac(-32, 9), 8, frac(4, 3), frac(-32, 9), 8, frac(4, 3)}));
  const auto d53 = derived_deltas(derive_with_alpha(strong_hexagon(), Rational(1)));
  EXPECT_EQ(d53.deltas.values,
            (std::vector<Rational>{frac(-4, 5), frac(1, 8), frac(3, 10), frac(-4, 5), frac(1, 8), frac(3, 10)}));
  const auto dq = derived_deltas(derive_with_alpha(worked_quadrangle(), Rational(1)));
  EXPECT_FALSE(dq.generic);
  for (const auto& x : dq.deltas.values) EXPECT_TRUE(x.is_zero());
}

TEST(Derived, StronglyRegularExamples) {
  EXPECT_TRUE(strongly_regular_check(dl({frac(-32, 9), 8, frac(4, 3), frac(-32, 9), 8, frac(4, 3)})));
  EXPECT_TRUE(strongly_regular_check(dl({1, 2, frac(-5, 2), 1, 2, frac(-5, 2)})));
  EXPECT_FALSE(strongly_regular_check(dl({1, 2, 9, 15, -20, -6})));
  EXPECT_THROW(strongly_regular_check(dl({1, 2, 3, 4})), precondition_error);
}

TEST(Derived, HexTypeExamples) {
  const auto t51 = hex_type(dl({frac(-32, 9), 8, frac(4, 3), frac(-32, 9), 8, frac(4, 3)}));
  // rotations (1,-9/4,-3/8), (1,1/6,-4/9), (1,-8/3,6); the last is smallest
  EXPECT_EQ(t51.triple, (std::array<Rational, 3>{1, frac(-8, 3), 6}));
  const auto t53 = hex_type(dl({1, 2, frac(-5, 2), 1, 2, frac(-5, 2)}));
  EXPECT_EQ(t53.triple, (std::array<Rational, 3>{1, frac(-5, 4), frac(1, 2)}));
  const auto sym = hex_type(dl({frac(-7, 3), frac(-7, 3), frac(-7, 3), frac(-7, 3), frac(-7, 3), frac(-7, 3)}));
  EXPECT_EQ(sym.triple, (std::array<Rational, 3>{1, 1, 1}));
  EXPECT_THROW(hex_type(dl({1, 2, 9, 15, -20, -6})), precondition_error);
  EXPECT_THROW(hex_type(dl({1, 0, 3, 1, 0, 3})), non_generic);
}

TEST(Derived, HexTypeIsRotationAndScaleInvariant) {
  Sampler rng(31);
  for (int i = 0; i < 100; ++i) {
    Rational a = rng.rational(9), b = rng.rational(9), c = rng.rational(9), s = rng.rational(9);
    if (a.is_zero() || b.is_zero() || c.is_zero() || s.is_zero()) continue;
    const auto t = hex_type(dl({a, b, c, a, b, c}));
    EXPECT_EQ(hex_type(dl({b, c, a, b, c, a})), t);
    EXPECT_EQ(hex_type(dl({s * c, s * a, s * b, s * c, s * a, s * b})), t);
    EXPECT_EQ(t.triple[0], Rational(1));
  }
}

TEST(Derived, TwoPlaneRegularHexagon) {
  const auto pd = two_plane_decomposition(derive_with_alpha(regular_hexagon(), Rational(1)));
  EXPECT_TRUE(pd.parallel_planes);
  for (const auto& o : pd.odd_offsets) EXPECT_TRUE(o.is_zero());
  EXPECT_TRUE(pd.projected_area_vector.is_zero());
  EXPECT_TRUE(pd.holds());
}

TEST(Derived, TwoPlaneLiftFixtureAndPerturbation) {
  GenConfig cfg;
  cfg.seed = 3;
  const auto lifted = regular_hexagon_via_lift(cfg);
  const auto pd = two_plane_decomposition(lifted.support.vectors);
  EXPECT_TRUE(pd.normal.x.is_zero());
  EXPECT_TRUE(pd.normal.y.is_zero());
  EXPECT_FALSE(pd.normal.z.is_zero());
  EXPECT_TRUE(pd.holds());

  auto moved = lifted.support.vectors;
  moved[3].z += Rational(1);
  const auto bad = two_plane_decomposition(moved);
  EXPECT_FALSE(bad.parallel_planes);
  EXPECT_FALSE(bad.holds());

  std::vector<RVec> collinear{{0, 0, 0}, {1, 2, 3}, {1, 0, 0}, {0, 5, 1}, {2, 0, 0}, {3, 3, 3}};
  EXPECT_THROW(two_plane_decomposition(collinear), non_generic);
}

TEST(Derived, SecondDerivativeExamples) {
  const auto sd = second_derivative_type(regular_hexagon(), Rational(1), Rational(1));
  EXPECT_TRUE(sd.types_equal());
  EXPECT_TRUE(sd.shift_relations_hold());

  GenConfig cfg;
  cfg.seed = 11;
  const auto lifted = regular_hexagon_via_lift(cfg);
  const auto sd2 = second_derivative_type(edge_vectors(lifted.polygon), Rational(2), frac(1, 3));
  EXPECT_TRUE(sd2.types_equal());
  EXPECT_TRUE(sd2.shift_relations_hold());
  EXPECT_EQ(sd2.first_type, sd2.first_type);

  EXPECT_THROW(second_derivative_type(worked_quadrangle(), Rational(1), Rational(1)), precondition_error);
}

TEST(Derived, SelfIntersectionExamples) {
  EXPECT_TRUE(planar_self_intersection(derive_with_alpha(worked_quadrangle(), Rational(1))));
  EXPECT_FALSE(planar_self_intersection(std::vector<RVec>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}));
  EXPECT_TRUE(planar_self_intersection(std::vector<RVec>{{0, 0, 0}, {1, 1, 0}, {1, 0, 0}, {0, 1, 0}}));
  EXPECT_THROW(planar_self_intersection(std::vector<RVec>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 1}}),
               precondition_error);
}

TEST(Derived, RandomQuadrangleDerivativesSelfIntersect) {
  const std::vector<Rational> alphas{1, 2, -3, frac(1, 2), frac(7, 5)};
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    const auto e = edge_vectors(random_generic_polygon(4, cfg));
    const auto p = derive_with_alpha(e, alphas[seed % alphas.size()]);
    ASSERT_TRUE(is_planar(p).planar);
    ASSERT_TRUE(area_vector(p.vertices).is_zero());
    ASSERT_TRUE(planar_self_intersection(p)) << "seed " << seed;
  }
}

// Five vectors with a common z coordinate: the area sum has no x or y part.
TEST(Derived, CommonHeightAreaSumIsVertical) {
  Sampler rng(4);
  for (int i = 0; i < 100; ++i) {
    const Rational h = rng.rational(7);
    std::vector<RVec> u;
    for (int k = 0; k < 5; ++k) u.push_back(RVec{rng.rational(7), rng.rational(7), h});
    const RVec s = area_vector(u);
    EXPECT_TRUE(s.x.is_zero());
    EXPECT_TRUE(s.y.is_zero());
  }
}

TEST(Derived, RegularPentagonDerivativeIsPlanarInQuadraticField) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    const auto e = edge_vectors(random_regular_pentagon(cfg));
    const auto d = deltas(e);
    const auto v = check_regularity(d);
    const auto p = derive(support_system(support_basis(e, d), v, canonical_alpha(v)));
    EXPECT_TRUE(is_planar(p).planar);
    EXPECT_TRUE(area_vector(p.vertices).is_zero());
    EXPECT_TRUE(derivability_defect(p.edges).is_zero());
  }
}
