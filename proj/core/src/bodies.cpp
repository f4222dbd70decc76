#include <absorb/bodies.hpp>

#include <cmath>
#include <utility>

namespace absorb {

template <class T>
BasicConvexBody<T>::BasicConvexBody(BodyKind kind, BasicPoint<T> center, T radius)
    : kind_(kind), center_(std::move(center)), radius_(std::move(radius)) {
  if (center_.empty()) throw DimensionMismatch("body dimension must be >= 1");
  if (!(radius_ > 0)) throw Error("body radius must be positive");
  if (kind_ == BodyKind::Ball && is_rational_v<T>)
    throw ModeUnsupported("balls require float mode");
}

template <class T>
BasicConvexBody<T> BasicConvexBody<T>::ball(BasicPoint<T> center, T radius) {
  return {BodyKind::Ball, std::move(center), std::move(radius)};
}

template <class T>
BasicConvexBody<T> BasicConvexBody<T>::unit_ball(std::size_t n) {
  return ball(BasicPoint<T>(n, T(0)), T(1));
}

template <class T>
BasicConvexBody<T> BasicConvexBody<T>::cube(BasicPoint<T> center, T half_side) {
  return {BodyKind::Cube, std::move(center), std::move(half_side)};
}

template <class T>
BasicConvexBody<T> BasicConvexBody<T>::unit_cube(std::size_t n) {
  const T half = T(1) / T(2);
  return cube(BasicPoint<T>(n, half), half);
}

template <class T>
BasicConvexBody<T> BasicConvexBody<T>::sym_cube(std::size_t n) {
  return cube(BasicPoint<T>(n, T(0)), T(1));
}

template <class T>
bool BasicConvexBody<T>::is_unit_cube() const {
  const T half = T(1) / T(2);
  if (kind_ != BodyKind::Cube || radius_ != half) return false;
  for (const auto& c : center_)
    if (c != half) return false;
  return true;
}

template <class T>
bool BasicConvexBody<T>::is_sym_cube() const {
  if (kind_ != BodyKind::Cube || radius_ != T(1)) return false;
  for (const auto& c : center_)
    if (c != T(0)) return false;
  return true;
}

template <class T>
BasicConvexBody<T> BasicConvexBody<T>::translated(std::span<const T> shift) const {
  if (shift.size() != dim()) throw DimensionMismatch("translation dimension");
  BasicPoint<T> c = center_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += shift[i];
  return {kind_, std::move(c), radius_};
}

template <class T>
BasicConvexBody<T> BasicConvexBody<T>::scaled(const T& tau) const {
  if (!(tau > 0)) throw Error("body scale factor must be positive");
  return {kind_, center_, T(radius_ * tau)};
}

template <class T>
T BasicConvexBody<T>::support(std::span<const T> u) const {
  if (u.size() != dim()) throw DimensionMismatch("support direction dimension");
  T value(0);
  if (kind_ == BodyKind::Ball) {
    if constexpr (is_rational_v<T>) {
      throw ModeUnsupported("ball support function is irrational");
    } else {
      value = dot(u, center_) + radius_ * norm(u);
    }
  } else {
    for (std::size_t i = 0; i < u.size(); ++i) {
      const T mag = u[i] < 0 ? T(-u[i]) : u[i];
      value += u[i] * center_[i] + radius_ * mag;
    }
  }
  return value;
}

template <class T>
BasicPoint<T> BasicConvexBody<T>::support_point(std::span<const T> u) const {
  if (u.size() != dim()) throw DimensionMismatch("support direction dimension");
  BasicPoint<T> x = center_;
  if (kind_ == BodyKind::Ball) {
    if constexpr (is_rational_v<T>) {
      throw ModeUnsupported("ball support point is irrational");
    } else {
      const double len = norm(u);
      if (len > 0.0)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += radius_ * u[i] / len;
    }
  } else {
    // Ties (u_i == 0) go to the lower face.
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] += u[i] > 0 ? radius_ : T(-radius_);
  }
  return x;
}

template <class T>
std::string BasicConvexBody<T>::label() const {
  if (kind_ == BodyKind::Ball) return "ball";
  if (is_unit_cube()) return "unit_cube";
  if (is_sym_cube()) return "sym_cube";
  return "cube";
}

template <class T>
FacetMaximum<T> max_neg_lambda(const BasicConvexBody<T>& body,
                               const BasicSimplex<T>& s, std::size_t j) {
  if (body.dim() != s.dim()) throw DimensionMismatch("body and simplex dimensions differ");
  const auto& l = s.coeffs();
  Vector<T> u = l.normal(j);
  for (auto& x : u) x = -x;
  return {T(body.support(u) - l.offset(j)), body.support_point(u)};
}

template class BasicConvexBody<double>;
template class BasicConvexBody<Rational>;
template FacetMaximum<double> max_neg_lambda(const BasicConvexBody<double>&,
                                             const BasicSimplex<double>&, std::size_t);
template FacetMaximum<Rational> max_neg_lambda(const BasicConvexBody<Rational>&,
                                               const BasicSimplex<Rational>&,
                                               std::size_t);

}  // namespace absorb
