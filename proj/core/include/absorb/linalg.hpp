#pragma once

// Dense linear algebra sized for the (n+1)x(n+1) systems that appear in
// simplex computations. Two scalar types are supported: double (partial
// pivoting, pivot threshold kPivotEpsilon after row scaling) and Rational
// (exact elimination).

#include <absorb/errors.hpp>
#include <absorb/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace absorb {

/// Pivot magnitude below which a Float-mode matrix is declared singular.
inline constexpr double kPivotEpsilon = 1e-12;

template <class T>
using Vector = std::vector<T>;

template <class T>
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries);
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector<T> column(std::size_t c) const;

  const std::vector<T>& entries() const { return data_; }

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);

template <class T>
Vector<T> operator*(const Matrix<T>& a, std::span<const T> x);

/// Inverse by Gauss-Jordan elimination. Throws SingularMatrix.
template <class T>
Matrix<T> invert(const Matrix<T>& m);

/// LU with partial pivoting for double, Bareiss fraction-free elimination for
/// Rational. Never throws on singular input; returns 0 (or a value near 0).
template <class T>
T determinant(const Matrix<T>& m);

/// Solves m x = b. Throws SingularMatrix.
template <class T>
Vector<T> solve(const Matrix<T>& m, std::span<const T> b);

/// max_ij |a_ij - b_ij| for double matrices.
double max_abs_diff(const Matrix<double>& a, const Matrix<double>& b);

/// Ratio of largest to smallest pivot magnitude seen during elimination; a
/// cheap conditioning estimate. Returns +inf for singular matrices.
double pivot_condition_estimate(const Matrix<double>& m);

// Small vector helpers used throughout the library.
double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
double distance(std::span<const double> a, std::span<const double> b);

extern template class Matrix<double>;
extern template class Matrix<Rational>;

}  // namespace absorb
