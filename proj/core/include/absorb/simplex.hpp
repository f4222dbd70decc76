#pragma once

#include <absorb/linalg.hpp>

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace absorb {

template <class T>
using BasicPoint = std::vector<T>;
using Point = BasicPoint<double>;

/// The inverse L = A^{-1} of the bordered vertex matrix. Column j holds the
/// coefficients of the j-th basic Lagrange polynomial
///   lambda_j(x) = l_{0j} x_0 + ... + l_{n-1,j} x_{n-1} + l_{nj},
/// so the first n entries form the facet normal a_j and the last entry is
/// lambda_j(0). Facet j is the one opposite vertex j.
template <class T>
class LagrangeCoeffs {
public:
  explicit LagrangeCoeffs(Matrix<T> inverse);

  std::size_t dim() const { return inverse_.rows() - 1; }
  const Matrix<T>& matrix() const { return inverse_; }

  const T& coeff(std::size_t i, std::size_t j) const { return inverse_(i, j); }
  /// a_j = (l_{0j}, ..., l_{n-1,j}); points from facet j toward vertex j.
  Vector<T> normal(std::size_t j) const;
  /// l_{nj} = lambda_j(0).
  const T& offset(std::size_t j) const { return inverse_(dim(), j); }

  T eval(std::size_t j, std::span<const T> x) const;

private:
  Matrix<T> inverse_;
};

/// A nondegenerate n-simplex given by n+1 vertices in R^n. Immutable; the
/// Lagrange coefficients are computed once on first use and shared between
/// copies.
template <class T>
class BasicSimplex {
public:
  /// Throws DimensionMismatch unless there are n+1 points of length n >= 1,
  /// and DegenerateSimplex when |det A| < 1e-12 (max|coord| + 1)^n (double)
  /// or det A == 0 (Rational).
  explicit BasicSimplex(std::vector<BasicPoint<T>> vertices);

  std::size_t dim() const { return vertices_.size() - 1; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<BasicPoint<T>>& vertices() const { return vertices_; }
  const BasicPoint<T>& vertex(std::size_t j) const { return vertices_[j]; }

  /// Rows (x^(j), 1).
  Matrix<T> vertex_matrix() const;
  const T& vertex_determinant() const { return det_; }

  const LagrangeCoeffs<T>& coeffs() const;

  /// lambda_j(x), the j-th barycentric coordinate.
  T lagrange(std::size_t j, std::span<const T> x) const;
  Vector<T> barycentric(std::span<const T> x) const;

  /// |det A| / n!
  T volume() const;
  BasicPoint<T> centroid() const;

  /// Homothety about the centroid with ratio tau. Throws DegenerateSimplex
  /// when tau == 0.
  BasicSimplex dilate(const T& tau) const;
  BasicSimplex translate(std::span<const T> shift) const;

private:
  struct Cache {
    std::once_flag once;
    std::optional<LagrangeCoeffs<T>> coeffs;
  };

  std::vector<BasicPoint<T>> vertices_;
  T det_;
  std::shared_ptr<Cache> cache_;
};

using Simplex = BasicSimplex<double>;
using RationalSimplex = BasicSimplex<Rational>;

template <class T>
BasicSimplex<T> make_simplex(std::vector<BasicPoint<T>> vertices) {
  return BasicSimplex<T>(std::move(vertices));
}

RationalSimplex to_rational(const Simplex& s);
Simplex to_float(const RationalSimplex& s);

extern template class LagrangeCoeffs<double>;
extern template class LagrangeCoeffs<Rational>;
extern template class BasicSimplex<double>;
extern template class BasicSimplex<Rational>;

}  // namespace absorb
