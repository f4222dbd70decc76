#pragma once

// Absorption index xi(C;S): the least sigma >= 1 with C inside sigma*S (the
// homothety taken about the centroid of S). Translate index alpha(C;S): the
// least tau > 0 such that some translate of tau*S contains C.
//
// Both are computed from the per-facet maxima m_j = max_{x in C} (-lambda_j(x)):
//   xi    = max(1, (n+1) max_j m_j + 1)
//   alpha = sum_j m_j + 1
// The closed forms for balls and cubes further down are separate code paths
// kept for cross-validation; xi() and alpha() never call them.

#include <absorb/bodies.hpp>
#include <absorb/simplex.hpp>

#include <cstddef>
#include <vector>

namespace absorb {

inline constexpr double kCircumscribedTolerance = 1e-9;

template <class T>
struct AbsorptionResult {
  T value;
  std::vector<T> per_facet;      // m_j
  std::size_t argmax_facet = 0;  // j* with m_{j*} = max_j m_j
  BasicPoint<T> witness_point;   // x* in C with -lambda_{j*}(x*) = m_{j*}
  bool circumscribed = false;    // max_j m_j - min_j m_j <= tol
  bool contained = false;        // every m_j <= 0, i.e. C is inside S
  /// For alpha: C lies in translate(dilate(S, value), witness_translate).
  /// For xi the shift is zero.
  BasicPoint<T> witness_translate;
};

template <class T>
AbsorptionResult<T> xi(const BasicConvexBody<T>& body, const BasicSimplex<T>& s,
                       double tol = kCircumscribedTolerance);

template <class T>
AbsorptionResult<T> alpha(const BasicConvexBody<T>& body, const BasicSimplex<T>& s,
                          double tol = kCircumscribedTolerance);

/// Whether xi(C;S) S is circumscribed about C: all m_j agree within tol.
template <class T>
bool circumscribed_test(const BasicConvexBody<T>& body, const BasicSimplex<T>& s,
                        double tol = kCircumscribedTolerance);

// --- closed forms --------------------------------------------------------

/// rho * sum_j ||a_j||, alpha for a ball of radius rho (any center).
double alpha_ball_from_normals(const Simplex& s, double radius = 1.0);
/// rho * sum_j 1/h_j.
double alpha_ball_from_heights(const Simplex& s, double radius = 1.0);
/// rho / r.
double alpha_ball_from_inradius(const Simplex& s, double radius = 1.0);
/// rho * sigma / (n vol(S)), sigma the total facet measure.
double alpha_ball_from_surface(const Simplex& s, double radius = 1.0);

/// (n+1) max_j [rho ||a_j|| - (a_j, x0) - l_{nj}] + 1. Equals xi when the ball
/// is not inside S.
double xi_ball_closed_form(const Simplex& s, const Point& center, double radius);

/// (1/2) sum_ij |l_ij|
template <class T>
T alpha_unit_cube_from_coeffs(const BasicSimplex<T>& s);
/// sum_i 1/d_i
template <class T>
T alpha_unit_cube_from_diameters(const BasicSimplex<T>& s);
/// sum_ij |l_ij|
template <class T>
T alpha_sym_cube_from_coeffs(const BasicSimplex<T>& s);

extern template AbsorptionResult<double> xi(const ConvexBody&, const Simplex&, double);
extern template AbsorptionResult<Rational> xi(const RationalConvexBody&,
                                              const RationalSimplex&, double);
extern template AbsorptionResult<double> alpha(const ConvexBody&, const Simplex&,
                                               double);
extern template AbsorptionResult<Rational> alpha(const RationalConvexBody&,
                                                 const RationalSimplex&, double);
extern template bool circumscribed_test(const ConvexBody&, const Simplex&, double);
extern template bool circumscribed_test(const RationalConvexBody&,
                                        const RationalSimplex&, double);
extern template double alpha_unit_cube_from_coeffs(const Simplex&);
extern template Rational alpha_unit_cube_from_coeffs(const RationalSimplex&);
extern template double alpha_unit_cube_from_diameters(const Simplex&);
extern template Rational alpha_unit_cube_from_diameters(const RationalSimplex&);
extern template double alpha_sym_cube_from_coeffs(const Simplex&);
extern template Rational alpha_sym_cube_from_coeffs(const RationalSimplex&);

}  // namespace absorb
