#include <gtest/gtest.h>

#include "independent_oracle.hpp"
#include "polyderive/generators.hpp"
#include "polyderive/vec3.hpp"

using namespace polyderive;

namespace {

oracle::V to_oracle(const RVec& a) {
  return {oracle::q(a.x.to_string()), oracle::q(a.y.to_string()), oracle::q(a.z.to_string())};
}

}  // namespace

TEST(Geom3, DotExamples) {
  EXPECT_EQ(dot(RVec{1, 0, 0}, RVec{0, 1, 0}), Rational(0));
  EXPECT_EQ(dot(RVec{1, 1, 2}, RVec{-5, 3, 1}), Rational(0));
  EXPECT_EQ(dot(RVec{2, 2, 1}, RVec{3, -1, 1}), Rational(5));
}

TEST(Geom3, CrossExamples) {
  EXPECT_EQ(cross(RVec{1, 0, 0}, RVec{0, 1, 0}), (RVec{0, 0, 1}));
  EXPECT_EQ(cross(RVec{1, 1, 2}, RVec{1, 2, -1}), (RVec{-5, 3, 1}));
  EXPECT_EQ(cross(RVec{2, 2, 1}, RVec{3, -1, 1}), (RVec{3, 1, -8}));
}

TEST(Geom3, MixedExamples) {
  EXPECT_EQ(mixed(RVec{1, 0, 0}, RVec{0, 1, 0}, RVec{0, 0, 1}), Rational(1));
  EXPECT_EQ(mixed(RVec{0, 0, 1}, RVec{2, -1, 3}, RVec{-1, 5, 2}), Rational(9));
}

TEST(Geom3, AreaVectorExamples) {
  EXPECT_EQ(area_vector(std::vector<RVec>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), (RVec{0, 0, 1}));
  EXPECT_TRUE(area_vector(std::vector<RVec>{{2, 2, 1}, {3, -1, 1}, {-3, 1, 1}, {-4, 0, 1}, {-1, -1, 1}}).is_zero());
  // forward then backward along the same path
  EXPECT_TRUE(area_vector(std::vector<RVec>{{0, 0, 0}, {1, 2, 3}, {4, 0, 1}, {1, 2, 3}}).is_zero());
  EXPECT_THROW(area_vector(std::vector<RVec>{{0, 0, 0}, {1, 0, 0}}), precondition_error);
}

TEST(Geom3, QuadExtVectors) {
  const QuadExt r = QuadExt::root(Rational(2));
  const QVec a{r, QuadExt(1), QuadExt(0)};
  const QVec b{QuadExt(0), r, QuadExt(1)};
  EXPECT_EQ(cross(a, b), (QVec{QuadExt(1), -r, QuadExt(Rational(2))}));
  EXPECT_EQ(dot(a, a), QuadExt(Rational(3)));
  EXPECT_THROW(dot(a, QVec{QuadExt::root(Rational(3)), QuadExt(0), QuadExt(0)}), radicand_mismatch);
}

TEST(Geom3, PropertiesAgainstIndependentOracle) {
  Sampler rng(2024);
  for (int i = 0; i < 300; ++i) {
    const RVec a = rng.vec(12), b = rng.vec(12), c = rng.vec(12), t = rng.vec(12);
    EXPECT_EQ(cross(a, b), -cross(b, a));
    EXPECT_EQ(mixed(a, b, c), -mixed(b, a, c));
    EXPECT_EQ(mixed(a, b, c), mixed(b, c, a));
    const RVec ab = cross(a, b);
    EXPECT_EQ(dot(ab, a), Rational(0));
    EXPECT_EQ(dot(ab, ab), dot(a, a) * dot(b, b) - dot(a, b) * dot(a, b));
    // independent determinant and cross product
    EXPECT_EQ(mixed(a, b, c).to_string(),
              oracle::Q(oracle::leibniz_det(to_oracle(a), to_oracle(b), to_oracle(c))).get_str());
    EXPECT_EQ(to_oracle(ab), oracle::cross(to_oracle(a), to_oracle(b)));
    // translation invariance of the area vector
    std::vector<RVec> pts{a, b, c, t}, moved;
    for (const auto& p : pts) moved.push_back(p + t);
    EXPECT_EQ(area_vector(pts), area_vector(moved));
  }
}
