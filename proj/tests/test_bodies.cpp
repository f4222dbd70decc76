#include <absorb/bodies.hpp>
#include <absorb/errors.hpp>

#include <gtest/gtest.h>

#include <cmath>

namespace absorb {
namespace {

const Simplex kStd2{{{0, 0}, {1, 0}, {0, 1}}};

TEST(Support, Ball) {
  const std::vector<double> u{3, 4};
  EXPECT_DOUBLE_EQ(ConvexBody::unit_ball(2).support(u), 5.0);
  EXPECT_DOUBLE_EQ(ConvexBody::ball({1, 1}, 2.0).support(u), 7.0 + 10.0);
}

TEST(Support, Cubes) {
  const std::vector<double> u{-1, 2};
  EXPECT_DOUBLE_EQ(ConvexBody::unit_cube(2).support(u), 2.0);
  const std::vector<double> w{1, -1, 1};
  EXPECT_DOUBLE_EQ(ConvexBody::sym_cube(3).support(w), 3.0);
  const std::vector<Rational> q{Rational(-1), Rational(2)};
  EXPECT_EQ(RationalConvexBody::unit_cube(2).support(q), Rational(2));
}

TEST(Support, PointAttainsValue) {
  const ConvexBody cube = ConvexBody::cube({0.5, -1, 2}, 0.25);
  const std::vector<double> u{1, -2, 0.5};
  const Point p = cube.support_point(u);
  EXPECT_DOUBLE_EQ(p[0] * u[0] + p[1] * u[1] + p[2] * u[2], cube.support(u));
  const ConvexBody ball = ConvexBody::ball({1, 0, 0}, 3.0);
  const Point q = ball.support_point(u);
  EXPECT_NEAR(q[0] * u[0] + q[1] * u[1] + q[2] * u[2], ball.support(u), 1e-12);
}

TEST(Bodies, Labels) {
  EXPECT_EQ(ConvexBody::unit_cube(3).label(), "unit_cube");
  EXPECT_EQ(ConvexBody::sym_cube(3).label(), "sym_cube");
  EXPECT_EQ(ConvexBody::unit_ball(3).label(), "ball");
  EXPECT_EQ(ConvexBody::cube({0, 0}, 2.0).label(), "cube");
  EXPECT_TRUE(ConvexBody::cube({0.5, 0.5}, 0.5).is_unit_cube());
}

TEST(Bodies, TranslateAndScale) {
  // Scaling keeps the center fixed.
  const ConvexBody c = ConvexBody::unit_cube(2).scaled(2.0).translated(Point{-0.5, -0.5});
  EXPECT_EQ(c.center(), (Point{0, 0}));
  EXPECT_DOUBLE_EQ(c.radius(), 1.0);
  EXPECT_TRUE(c.is_sym_cube());
}

TEST(Bodies, InvalidInputs) {
  EXPECT_THROW(ConvexBody::ball({0, 0}, -1.0), Error);
  EXPECT_THROW(RationalConvexBody::unit_ball(2), ModeUnsupported);
  const std::vector<double> u{1, 2, 3};
  EXPECT_THROW(ConvexBody::unit_ball(2).support(u), DimensionMismatch);
}

TEST(MaxNegLambda, BallOnStandardTriangle) {
  const auto m = max_neg_lambda(ConvexBody::unit_ball(2), kStd2, 0);
  EXPECT_NEAR(m.value, std::sqrt(2.0) - 1.0, 1e-15);
  EXPECT_NEAR(m.witness[0], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(m.witness[1], 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(MaxNegLambda, CubeOnStandardTriangle) {
  const auto m = max_neg_lambda(ConvexBody::unit_cube(2), kStd2, 0);
  EXPECT_DOUBLE_EQ(m.value, 1.0);
  EXPECT_EQ(m.witness, (Point{1, 1}));
}

TEST(MaxNegLambda, WitnessEvaluatesToValue) {
  const Simplex s{{{0.3, -1}, {2, 0.5}, {-0.7, 1.2}}};
  for (const auto& body : {ConvexBody::unit_ball(2), ConvexBody::ball({0.2, 0.1}, 0.4),
                           ConvexBody::unit_cube(2), ConvexBody::sym_cube(2)}) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto m = max_neg_lambda(body, s, j);
      EXPECT_NEAR(-s.lagrange(j, m.witness), m.value, 1e-12);
    }
  }
}

}  // namespace
}  // namespace absorb
