#include <absorb/constructions.hpp>
#include <absorb/errors.hpp>
#include <absorb/simplex.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <thread>

namespace absorb {
namespace {

const Simplex kStd2{{{0, 0}, {1, 0}, {0, 1}}};

TEST(Simplex, Construction) {
  EXPECT_EQ(kStd2.dim(), 2u);
  EXPECT_EQ(kStd2.vertex_count(), 3u);
  const Simplex segment{{{0}, {1}}};
  EXPECT_EQ(segment.dim(), 1u);
}

TEST(Simplex, RejectsDegenerateAndMalformed) {
  EXPECT_THROW(Simplex({{0, 0}, {1, 0}, {2, 0}}), DegenerateSimplex);
  EXPECT_THROW(RationalSimplex({{0, 0}, {1, 1}, {2, 2}}), DegenerateSimplex);
  EXPECT_THROW(Simplex({{0, 0}, {1, 0}}), DimensionMismatch);
  EXPECT_THROW(Simplex({{0, 0}, {1, 0}, {0}}), DimensionMismatch);
  EXPECT_THROW(Simplex({{0, 0}, {1, 0}, {0, NAN}}), DegenerateSimplex);
  EXPECT_THROW(Simplex(std::vector<Point>{{0}}), DimensionMismatch);
}

TEST(Simplex, LagrangeCoefficientsOfStandardTriangle) {
  const auto& l = kStd2.coeffs();
  EXPECT_DOUBLE_EQ(l.coeff(0, 0), -1.0);
  EXPECT_DOUBLE_EQ(l.coeff(1, 0), -1.0);
  EXPECT_DOUBLE_EQ(l.offset(0), 1.0);
  EXPECT_DOUBLE_EQ(l.coeff(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(l.offset(1), 0.0);
  EXPECT_EQ(l.normal(2), (Vector<double>{0, 1}));
}

TEST(Simplex, LagrangeEvaluation) {
  const std::vector<double> origin{0, 0};
  const std::vector<double> corner{1, 1};
  EXPECT_DOUBLE_EQ(kStd2.lagrange(0, origin), 1.0);
  EXPECT_DOUBLE_EQ(kStd2.lagrange(0, corner), -1.0);
}

TEST(Simplex, LagrangeIsKroneckerAtVertices) {
  const Simplex s = random_simplex(4, 11);
  for (std::size_t j = 0; j <= 4; ++j)
    for (std::size_t k = 0; k <= 4; ++k)
      EXPECT_NEAR(s.lagrange(j, s.vertex(k)), j == k ? 1.0 : 0.0, 1e-10);
}

TEST(Simplex, BarycentricSumsToOne) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Simplex s = random_simplex(3, seed);
    std::vector<double> x(3);
    for (auto& v : x) v = normal(rng);
    double sum = 0.0;
    for (double b : s.barycentric(x)) sum += b;
    EXPECT_NEAR(sum, 1.0, 1e-10);
  }
}

TEST(Simplex, Volume) {
  EXPECT_DOUBLE_EQ(kStd2.volume(), 0.5);
  EXPECT_EQ(standard_simplex<Rational>(4).volume(), Rational(1, 24));
  EXPECT_DOUBLE_EQ(Simplex({{0, 0}, {2, 0}, {0, 2}}).volume(), 2.0);
  EXPECT_DOUBLE_EQ(Simplex({{0, 0}, {0, 1}, {1, 0}}).volume(), 0.5);
}

TEST(Simplex, Centroid) {
  const auto c = to_rational(kStd2).centroid();
  EXPECT_EQ(c, (std::vector<Rational>{Rational(1, 3), Rational(1, 3)}));
  EXPECT_DOUBLE_EQ(Simplex({{0}, {1}}).centroid()[0], 0.5);
  for (double x : regular_inscribed_simplex(5).centroid()) EXPECT_NEAR(x, 0.0, 1e-12);
}

TEST(Simplex, DilateAboutCentroid) {
  const RationalSimplex s = to_rational(kStd2);
  EXPECT_EQ(s.dilate(Rational(1)).vertices(), s.vertices());
  const auto d = s.dilate(Rational(3));
  EXPECT_EQ(d.vertex(0), (std::vector<Rational>{Rational(-2, 3), Rational(-2, 3)}));
  EXPECT_EQ(d.centroid(), s.centroid());
  EXPECT_EQ(d.volume(), 9 * s.volume());
  EXPECT_THROW(kStd2.dilate(0.0), DegenerateSimplex);
}

TEST(Simplex, VolumeScalesUnderDilation) {
  const Simplex s = random_simplex(3, 5);
  EXPECT_NEAR(s.dilate(-2.0).volume(), 8.0 * s.volume(), 1e-12 * s.volume() * 8);
}

TEST(Simplex, Translate) {
  const std::vector<double> shift{2, -1};
  const Simplex t = kStd2.translate(shift);
  EXPECT_EQ(t.vertex(1), (Point{3, -1}));
  EXPECT_DOUBLE_EQ(t.volume(), 0.5);
  const std::vector<double> bad{1};
  EXPECT_THROW(kStd2.translate(bad), DimensionMismatch);
}

TEST(Simplex, RationalRoundTrip) {
  const Simplex s{{{0.5, 0}, {1, 0.25}, {0, 1}}};
  EXPECT_EQ(to_float(to_rational(s)).vertices(), s.vertices());
  EXPECT_EQ(to_rational(s).vertex(0)[0], Rational(1, 2));
}

TEST(Simplex, CoefficientCacheIsSharedAcrossThreads) {
  const Simplex s = random_simplex(5, 42);
  std::vector<const LagrangeCoeffs<double>*> seen(4);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < seen.size(); ++t)
      pool.emplace_back([&, t] { seen[t] = &s.coeffs(); });
  }
  for (const auto* p : seen) EXPECT_EQ(p, seen.front());
}

}  // namespace
}  // namespace absorb
