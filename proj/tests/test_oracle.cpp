#include <absorb/absorption.hpp>
#include <absorb/constructions.hpp>
#include <absorb/errors.hpp>
#include <absorb/metrics.hpp>
#include <absorb/oracle.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <optional>

namespace absorb {
namespace {

const Simplex kStd2{{{0, 0}, {1, 0}, {0, 1}}};

TEST(FacetFrames, HeightsAndDistances) {
  const FacetFrames f(kStd2);
  EXPECT_NEAR(f.height(0), 1.0 / std::sqrt(2.0), 1e-15);
  const Point p{0.25, 0.25};
  EXPECT_NEAR(f.signed_distance(1, p), 0.25, 1e-15);
  EXPECT_NEAR(f.signed_distance(0, p), 0.5 / std::sqrt(2.0), 1e-15);
  EXPECT_LT(f.signed_distance(0, Point{1, 1}), 0.0);
}

TEST(BallInSimplex, Incircle) {
  const Ball in = inscribed_ball(kStd2);
  const auto tight = ball_in_simplex(in.center, in.radius, kStd2);
  EXPECT_TRUE(tight.contained);
  EXPECT_NEAR(tight.margin, 0.0, 1e-12);
  const auto loose = ball_in_simplex(in.center, in.radius * 1.01, kStd2);
  EXPECT_FALSE(loose.contained);
  EXPECT_TRUE(loose.violating_facet.has_value());
}

TEST(BallInSimplex, UnitBallInScaledRegular) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r =
        ball_in_simplex(Point(n, 0.0), 1.0, regular_inscribed_simplex(n).dilate(double(n)));
    EXPECT_TRUE(r.contained);
    EXPECT_NEAR(r.margin, 0.0, 1e-12);
  }
}

TEST(CubeInSimplex, Examples) {
  EXPECT_TRUE(
      cube_in_simplex(ConvexBody::unit_cube(3), hadamard_simplex<double>(3).dilate(3.0)).contained);
  const auto r = cube_in_simplex(ConvexBody::unit_cube(2), kStd2);
  EXPECT_FALSE(r.contained);
  EXPECT_EQ(r.violating_facet, 0u);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto tight = cube_in_simplex(ConvexBody::unit_cube(n),
                                       standard_simplex<double>(n).dilate(double(n * n)));
    EXPECT_TRUE(tight.contained);
    EXPECT_NEAR(tight.margin, 0.0, 1e-12);
  }
}

TEST(CubeInSimplex, Errors) {
  EXPECT_THROW(cube_in_simplex(ConvexBody::unit_ball(2), kStd2), Error);
  EXPECT_THROW(cube_in_simplex(ConvexBody::unit_cube(3), kStd2), DimensionMismatch);
  EXPECT_THROW(cube_in_simplex(ConvexBody::unit_cube(21), standard_simplex<double>(21)),
               DimensionTooLarge);
}

TEST(XiBisection, KnownValues) {
  EXPECT_NEAR(xi_bisection(ConvexBody::unit_ball(2), kStd2), 4.0, 1e-6);
  EXPECT_NEAR(xi_bisection(ConvexBody::unit_ball(3), regular_inscribed_simplex(3)), 3.0, 1e-6);
  EXPECT_DOUBLE_EQ(xi_bisection(ConvexBody::cube({0.2, 0.2}, 0.05), kStd2), 1.0);
}

TEST(XiBisection, MatchesFormulaOnRandomPairs) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const Simplex s = random_simplex(n, seed);
    for (const auto& body : {ConvexBody::unit_ball(n), ConvexBody::sym_cube(n)})
      EXPECT_NEAR(xi_bisection(body, s), xi(body, s).value, 1e-8 * std::max(1.0, xi(body, s).value));
  }
}

TEST(Chebyshev, KnownValues) {
  const InscribedBall b = chebyshev_inradius(kStd2);
  EXPECT_NEAR(b.radius, 0.2928932188134524, 1e-10);
  EXPECT_NEAR(b.center[0], 0.2928932188134524, 1e-10);
  EXPECT_NEAR(b.center[1], 0.2928932188134524, 1e-10);
  for (std::size_t n = 2; n <= 7; ++n) {
    const InscribedBall r = chebyshev_inradius(regular_inscribed_simplex(n));
    EXPECT_NEAR(r.radius, 1.0 / double(n), 1e-12);
    for (double x : r.center) EXPECT_NEAR(x, 0.0, 1e-12);
  }
}

TEST(AxialBruteForce, KnownValues) {
  EXPECT_NEAR(axial_diameter_bruteforce(kStd2, 0), 1.0, 1e-6);
  const Simplex h = hadamard_simplex<double>(3);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(axial_diameter_bruteforce(h, i), 1.0, 1e-6);
  const Simplex s = random_simplex(3, 12);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_NEAR(axial_diameter_bruteforce(s.dilate(2.0), i),
                2.0 * axial_diameter_bruteforce(s, i), 1e-6);
}

TEST(CubeSandwich, HadamardSimplexPasses) {
  const CubeSandwichReport r = cube_sandwich_check(hadamard_simplex<double>(3));
  EXPECT_TRUE(r.simplex_in_cube);
  EXPECT_TRUE(r.cube_in_dilate);
  EXPECT_TRUE(r.regular);
  EXPECT_TRUE(r.ball_in_dilate);
  EXPECT_TRUE(r.implication_holds);
}

TEST(CubeSandwich, StandardTriangleFailsPrecondition) {
  EXPECT_THROW(cube_sandwich_check(kStd2), PreconditionFailed);
  EXPECT_THROW(cube_sandwich_check(Simplex({{0, 0}, {2, 0}, {0, 1}})), PreconditionFailed);
}

TEST(CubeSandwich, CubeVertexSimplicesInDimensionThree) {
  std::vector<Point> corners;
  for (int m = 0; m < 8; ++m)
    corners.push_back({double(m & 1), double((m >> 1) & 1), double((m >> 2) & 1)});
  int passing = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c)
        for (int d = c + 1; d < 8; ++d) {
          std::optional<Simplex> s;
          try {
            s.emplace(std::vector<Point>{corners[a], corners[b], corners[c], corners[d]});
          } catch (const DegenerateSimplex&) {
            continue;
          }
          try {
            const CubeSandwichReport r = cube_sandwich_check(*s);
            ++passing;
            EXPECT_TRUE(r.implication_holds);
            EXPECT_EQ(r.regular, r.ball_in_dilate);
          } catch (const PreconditionFailed&) {
          }
        }
  EXPECT_EQ(passing, 2);
}

}  // namespace
}  // namespace absorb
