#include <absorb/absorption.hpp>

#include <absorb/metrics.hpp>

#include <algorithm>
#include <cmath>

namespace absorb {

namespace {

template <class T>
T abs_value(const T& x) {
  return x < 0 ? T(-x) : x;
}

template <class T>
AbsorptionResult<T> facet_maxima(const BasicConvexBody<T>& body,
                                 const BasicSimplex<T>& s, double tol) {
  if (body.dim() != s.dim()) throw DimensionMismatch("body and simplex dimensions differ");
  AbsorptionResult<T> out{T(0), {}, 0, {}, false, false, BasicPoint<T>(s.dim(), T(0))};
  out.per_facet.reserve(s.vertex_count());

  T best(0);
  T worst(0);
  for (std::size_t j = 0; j < s.vertex_count(); ++j) {
    FacetMaximum<T> fm = max_neg_lambda(body, s, j);
    if (j == 0 || fm.value > best) {
      best = fm.value;
      out.argmax_facet = j;
      out.witness_point = std::move(fm.witness);
    }
    if (j == 0 || fm.value < worst) worst = fm.value;
    out.per_facet.push_back(std::move(fm.value));
  }
  out.contained = !(best > 0);
  out.circumscribed = (best - worst) <= from_double<T>(tol);
  return out;
}

}  // namespace

template <class T>
AbsorptionResult<T> xi(const BasicConvexBody<T>& body, const BasicSimplex<T>& s,
                       double tol) {
  AbsorptionResult<T> out = facet_maxima(body, s, tol);
  if (out.contained) {
    out.value = T(1);
  } else {
    const T count(static_cast<long>(s.vertex_count()));
    out.value = count * out.per_facet[out.argmax_facet] + T(1);
  }
  return out;
}

template <class T>
AbsorptionResult<T> alpha(const BasicConvexBody<T>& body, const BasicSimplex<T>& s,
                          double tol) {
  AbsorptionResult<T> out = facet_maxima(body, s, tol);
  T sum(1);
  for (const auto& m : out.per_facet) sum += m;
  out.value = sum;

  // The simplex {x : lambda_j(x) >= -m_j} contains C and equals
  // dilate(S, alpha) shifted by sum_j m_j (c - x^(j)).
  const BasicPoint<T> c = s.centroid();
  for (std::size_t j = 0; j < s.vertex_count(); ++j)
    for (std::size_t i = 0; i < s.dim(); ++i)
      out.witness_translate[i] += out.per_facet[j] * (c[i] - s.vertex(j)[i]);
  return out;
}

template <class T>
bool circumscribed_test(const BasicConvexBody<T>& body, const BasicSimplex<T>& s,
                        double tol) {
  return facet_maxima(body, s, tol).circumscribed;
}

double alpha_ball_from_normals(const Simplex& s, double radius) {
  const auto& l = s.coeffs();
  double total = 0.0;
  for (std::size_t j = 0; j < s.vertex_count(); ++j) {
    double sq = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i) sq += l.coeff(i, j) * l.coeff(i, j);
    total += std::sqrt(sq);
  }
  return radius * total;
}

double alpha_ball_from_heights(const Simplex& s, double radius) {
  double total = 0.0;
  for (double h : heights(s)) total += 1.0 / h;
  return radius * total;
}

double alpha_ball_from_inradius(const Simplex& s, double radius) {
  return radius / inscribed_ball(s).radius;
}

double alpha_ball_from_surface(const Simplex& s, double radius) {
  double sigma = 0.0;
  for (double f : facet_measures(s)) sigma += f;
  return radius * sigma / (static_cast<double>(s.dim()) * s.volume());
}

double xi_ball_closed_form(const Simplex& s, const Point& center, double radius) {
  if (center.size() != s.dim()) throw DimensionMismatch("ball center dimension");
  const auto& l = s.coeffs();
  double best = 0.0;
  for (std::size_t j = 0; j < s.vertex_count(); ++j) {
    double sq = 0.0;
    double shift = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      sq += l.coeff(i, j) * l.coeff(i, j);
      shift += l.coeff(i, j) * center[i];
    }
    const double term = radius * std::sqrt(sq) - shift - l.offset(j);
    if (j == 0 || term > best) best = term;
  }
  return static_cast<double>(s.vertex_count()) * best + 1.0;
}

template <class T>
T alpha_unit_cube_from_coeffs(const BasicSimplex<T>& s) {
  return alpha_sym_cube_from_coeffs(s) / T(2);
}

template <class T>
T alpha_unit_cube_from_diameters(const BasicSimplex<T>& s) {
  T total(0);
  for (const auto& d : axial_diameters(s)) total += T(1) / d;
  return total;
}

template <class T>
T alpha_sym_cube_from_coeffs(const BasicSimplex<T>& s) {
  const auto& l = s.coeffs();
  T total(0);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.vertex_count(); ++j) total += abs_value(l.coeff(i, j));
  return total;
}

template AbsorptionResult<double> xi(const ConvexBody&, const Simplex&, double);
template AbsorptionResult<Rational> xi(const RationalConvexBody&, const RationalSimplex&,
                                       double);
template AbsorptionResult<double> alpha(const ConvexBody&, const Simplex&, double);
template AbsorptionResult<Rational> alpha(const RationalConvexBody&,
                                          const RationalSimplex&, double);
template bool circumscribed_test(const ConvexBody&, const Simplex&, double);
template bool circumscribed_test(const RationalConvexBody&, const RationalSimplex&,
                                 double);
template double alpha_unit_cube_from_coeffs(const Simplex&);
template Rational alpha_unit_cube_from_coeffs(const RationalSimplex&);
template double alpha_unit_cube_from_diameters(const Simplex&);
template Rational alpha_unit_cube_from_diameters(const RationalSimplex&);
template double alpha_sym_cube_from_coeffs(const Simplex&);
template Rational alpha_sym_cube_from_coeffs(const RationalSimplex&);

}  // namespace absorb
