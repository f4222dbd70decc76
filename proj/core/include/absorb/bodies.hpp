#pragma once

#include <absorb/simplex.hpp>

#include <cstddef>
#include <span>
#include <string>

namespace absorb {

enum class BodyKind { Ball, Cube };

/// A convex body described by its support function h_C(u) = max_{x in C} (u, x).
/// Balls are B(center; radius); cubes are axis-aligned with the given center
/// and half-side `radius`, so Q_n = [0,1]^n has center (1/2,...) and radius
/// 1/2, and Q'_n = [-1,1]^n has center 0 and radius 1. The family is closed
/// under translation and positive scaling about the center.
template <class T>
class BasicConvexBody {
public:
  static BasicConvexBody ball(BasicPoint<T> center, T radius);
  static BasicConvexBody unit_ball(std::size_t n);
  static BasicConvexBody cube(BasicPoint<T> center, T half_side);
  static BasicConvexBody unit_cube(std::size_t n);
  static BasicConvexBody sym_cube(std::size_t n);

  BodyKind kind() const { return kind_; }
  std::size_t dim() const { return center_.size(); }
  const BasicPoint<T>& center() const { return center_; }
  const T& radius() const { return radius_; }

  bool is_unit_cube() const;
  bool is_sym_cube() const;

  BasicConvexBody translated(std::span<const T> shift) const;
  /// Homothety about the center; tau must be positive.
  BasicConvexBody scaled(const T& tau) const;

  /// h_C(u). Ball support needs a square root and throws ModeUnsupported for
  /// Rational.
  T support(std::span<const T> u) const;

  /// A point of C attaining h_C(u).
  BasicPoint<T> support_point(std::span<const T> u) const;

  /// "ball", "unit_cube", "sym_cube" or "cube".
  std::string label() const;

private:
  BasicConvexBody(BodyKind kind, BasicPoint<T> center, T radius);

  BodyKind kind_;
  BasicPoint<T> center_;
  T radius_;
};

using ConvexBody = BasicConvexBody<double>;
using RationalConvexBody = BasicConvexBody<Rational>;

template <class T>
struct FacetMaximum {
  T value;                // max_{x in C} (-lambda_j(x))
  BasicPoint<T> witness;  // an x in C attaining it
};

/// max_{x in C} (-lambda_j(x)) = h_C(-a_j) - lambda_j(0).
template <class T>
FacetMaximum<T> max_neg_lambda(const BasicConvexBody<T>& body,
                               const BasicSimplex<T>& s, std::size_t j);

extern template class BasicConvexBody<double>;
extern template class BasicConvexBody<Rational>;
extern template FacetMaximum<double> max_neg_lambda(const BasicConvexBody<double>&,
                                                    const BasicSimplex<double>&,
                                                    std::size_t);
extern template FacetMaximum<Rational> max_neg_lambda(
    const BasicConvexBody<Rational>&, const BasicSimplex<Rational>&, std::size_t);

}  // namespace absorb
