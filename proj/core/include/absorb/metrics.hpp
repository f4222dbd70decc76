#pragma once

#include <absorb/simplex.hpp>

#include <cstddef>
#include <vector>

namespace absorb {

/// Largest dimension accepted by circumball(); the search enumerates all
/// 2^(n+1) vertex subsets.
inline constexpr std::size_t kMaxCircumballDim = 20;

inline constexpr double kRegularityTolerance = 1e-9;

struct Ball {
  Point center;
  double radius = 0.0;
};

struct EulerReport {
  double circumradius = 0.0;
  double n_times_inradius = 0.0;
  double gap = 0.0;  // circumradius - n * inradius
};

struct SimplexMetrics {
  double volume = 0.0;
  std::vector<double> heights;
  std::vector<double> axial_diameters;
  double inradius = 0.0;
  Point incenter;
  std::vector<Point> tangent_points;
  double circumradius = 0.0;
  Point circumcenter;
  std::vector<double> facet_measures;
  double surface = 0.0;
  EulerReport euler;
  bool regular = false;
};

/// h_j = 1 / ||a_j||, the distance from vertex j to the hyperplane of facet j.
std::vector<double> heights(const Simplex& s);

/// d_i = 2 / sum_j |l_ij|, the longest chord of S parallel to axis i.
template <class T>
std::vector<T> axial_diameters(const BasicSimplex<T>& s);

/// Inscribed ball: r = 1 / sum_j ||a_j||, z = r sum_j ||a_j|| x^(j).
Ball inscribed_ball(const Simplex& s);

/// y^(k) = z - (r / ||a_k||) a_k, where the inscribed ball touches facet k.
std::vector<Point> tangent_points(const Simplex& s);

/// (n-1)-measure of each facet from the Gram determinant of its edge vectors.
/// For n = 1 every facet is a point and gets measure 1.
std::vector<double> facet_measures(const Simplex& s);

/// Smallest ball containing S. Exhaustive over vertex subsets; throws
/// DimensionTooLarge when n > kMaxCircumballDim.
Ball circumball(const Simplex& s);

EulerReport euler_check(const Simplex& s);

/// All pairwise vertex distances agree within relative `tol`.
bool is_regular(const Simplex& s, double tol = kRegularityTolerance);

SimplexMetrics compute_metrics(const Simplex& s);

extern template std::vector<double> axial_diameters(const BasicSimplex<double>&);
extern template std::vector<Rational> axial_diameters(const BasicSimplex<Rational>&);

}  // namespace absorb
