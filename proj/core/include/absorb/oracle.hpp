#pragma once

// Verification oracles. Everything here works from the vertex coordinates
// and generic linear solves; none of it reads the Lagrange coefficients of
// the simplex, so it can be used to check the closed-form results.

#include <absorb/bodies.hpp>
#include <absorb/simplex.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace absorb {

inline constexpr double kContainmentTolerance = 1e-12;
inline constexpr double kBisectionWidth = 1e-9;
inline constexpr std::size_t kMaxCubeEnumerationDim = 20;
inline constexpr std::size_t kDefaultGridResolution = 50;

/// Hyperplane of each facet as a base point plus the unit normal pointing
/// toward the opposite vertex, obtained by projecting that vertex onto the
/// facet's affine hull.
class FacetFrames {
public:
  explicit FacetFrames(const Simplex& s);

  std::size_t dim() const { return dim_; }
  std::size_t facet_count() const { return normals_.size(); }
  const Point& normal(std::size_t j) const { return normals_[j]; }
  /// Distance from vertex j to the hyperplane of facet j.
  double height(std::size_t j) const { return heights_[j]; }
  /// Signed distance from x to facet j, positive on the simplex side.
  double signed_distance(std::size_t j, std::span<const double> x) const;
  /// Largest vertex-to-vertex distance, used to scale tolerances.
  double diameter() const { return diameter_; }

private:
  std::size_t dim_;
  std::vector<Point> bases_;
  std::vector<Point> normals_;
  std::vector<double> heights_;
  double diameter_ = 0.0;
};

struct ContainmentReport {
  bool contained = false;
  std::optional<std::size_t> violating_facet;
  /// Smallest signed slack over all checks (a distance).
  double margin = 0.0;
};

/// B(center; radius) inside S iff every signed facet distance of the center
/// is at least radius. The acceptance slack is tol * max(1, radius, diam S).
ContainmentReport ball_in_simplex(const Point& center, double radius, const Simplex& s,
                                  double tol = kContainmentTolerance);

/// Exact check over all 2^n vertices of a cube body. Throws
/// DimensionTooLarge when n > kMaxCubeEnumerationDim.
ContainmentReport cube_in_simplex(const ConvexBody& cube, const Simplex& s,
                                  double tol = kContainmentTolerance);

ContainmentReport body_in_simplex(const ConvexBody& body, const Simplex& s,
                                  double tol = kContainmentTolerance);

/// xi(C;S) straight from its definition: bisection on tau for the smallest
/// dilate(S, tau) that contains C.
double xi_bisection(const ConvexBody& body, const Simplex& s,
                    double width = kBisectionWidth);

struct InscribedBall {
  Point center;
  double radius = 0.0;
};

/// Solves (u_j, z - p_j) = r for j = 0..n as one (n+1)x(n+1) system.
InscribedBall chebyshev_inradius(const Simplex& s);

/// Lower bound for the i-th axial diameter: the longest chord parallel to
/// axis i through points of a barycentric grid, then refined by a local
/// search on the base point.
double axial_diameter_bruteforce(const Simplex& s, std::size_t axis,
                                 std::size_t resolution = kDefaultGridResolution);

struct CubeSandwichReport {
  bool simplex_in_cube = false;
  bool cube_in_dilate = false;
  bool regular = false;
  bool ball_in_dilate = false;
  double ball_margin = 0.0;
  /// "not regular implies ball not inside nS"
  bool implication_holds = false;
};

/// For S inside Q_n with Q_n inside nS, checks whether the ball circumscribed
/// about the cube lies in nS and whether that agrees with the regularity of S.
/// Throws PreconditionFailed when S is not in Q_n or Q_n is not in nS.
CubeSandwichReport cube_sandwich_check(const Simplex& s, double tol = kContainmentTolerance);

}  // namespace absorb
