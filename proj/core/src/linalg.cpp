#include <absorb/linalg.hpp>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace absorb {

template <class T>
Matrix<T>::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be >= 1");
}

template <class T>
Matrix<T>::Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be >= 1");
  if (data_.size() != rows * cols)
    throw DimensionMismatch("matrix entry count does not match rows*cols");
}

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw Error("matrix dimensions must be >= 1");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
  return out;
}

template <class T>
Vector<T> Matrix<T>::column(std::size_t c) const {
  Vector<T> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <class T>
Vector<T> operator*(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape");
  Vector<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

namespace {

void require_square(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols)
    throw DimensionMismatch(std::string(what) + ": matrix must be square");
}

// Row-scaled partial pivoting. Returns the chosen pivot row, or npos when the
// best scaled pivot falls below kPivotEpsilon.
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::size_t pick_pivot(const Matrix<double>& a, const std::vector<double>& scale,
                       std::size_t col, std::size_t from) {
  std::size_t best = npos;
  double best_ratio = 0.0;
  for (std::size_t r = from; r < a.rows(); ++r) {
    const double ratio = std::abs(a(r, col)) / scale[r];
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = r;
    }
  }
  return best_ratio < kPivotEpsilon ? npos : best;
}

std::vector<double> row_scales(const Matrix<double>& a) {
  std::vector<double> scale(a.rows(), 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      scale[r] = std::max(scale[r], std::abs(a(r, c)));
  return scale;
}

template <class T>
void swap_rows(Matrix<T>& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

// Gauss-Jordan on an augmented system [m | rhs]; rhs is transformed in place
// into m^{-1} rhs.
void gauss_jordan(Matrix<double> a, Matrix<double>& rhs) {
  const std::size_t n = a.rows();
  std::vector<double> scale = row_scales(a);
  for (double s : scale)
    if (s == 0.0) throw SingularMatrix("matrix has a zero row");

  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = pick_pivot(a, scale, k, k);
    if (p == npos) throw SingularMatrix("pivot below threshold");
    swap_rows(a, k, p);
    swap_rows(rhs, k, p);
    std::swap(scale[k], scale[p]);

    const double inv = 1.0 / a(k, k);
    for (std::size_t c = 0; c < n; ++c) a(k, c) *= inv;
    for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(k, c) *= inv;

    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      const double f = a(r, k);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(r, c) -= f * rhs(k, c);
    }
  }
}

void gauss_jordan(Matrix<Rational> a, Matrix<Rational>& rhs) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw SingularMatrix("exact zero pivot");
    swap_rows(a, k, p);
    swap_rows(rhs, k, p);

    const Rational inv = Rational(1) / a(k, k);
    for (std::size_t c = 0; c < n; ++c) a(k, c) *= inv;
    for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(k, c) *= inv;

    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      const Rational f = a(r, k);
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(r, c) -= f * rhs(k, c);
    }
  }
}

double lu_determinant(Matrix<double> a) {
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a(r, k)) > best) {
        best = std::abs(a(r, k));
        p = r;
      }
    if (best == 0.0) return 0.0;
    if (p != k) {
      swap_rows(a, k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a(r, k) / a(k, k);
      if (f == 0.0) continue;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

// Bareiss: every intermediate division is exact, so entries stay as small as
// the minors of the input.
Rational bareiss_determinant(Matrix<Rational> a) {
  const std::size_t n = a.rows();
  Rational sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Rational(0);
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

template <class T>
Matrix<T> invert(const Matrix<T>& m) {
  require_square(m.rows(), m.cols(), "invert");
  Matrix<T> out = Matrix<T>::identity(m.rows());
  gauss_jordan(m, out);
  return out;
}

template <class T>
T determinant(const Matrix<T>& m) {
  require_square(m.rows(), m.cols(), "determinant");
  if constexpr (is_rational_v<T>)
    return bareiss_determinant(m);
  else
    return lu_determinant(m);
}

template <class T>
Vector<T> solve(const Matrix<T>& m, std::span<const T> b) {
  require_square(m.rows(), m.cols(), "solve");
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length");
  Matrix<T> rhs(b.size(), 1, Vector<T>(b.begin(), b.end()));
  gauss_jordan(m, rhs);
  return rhs.column(0);
}

double max_abs_diff(const Matrix<double>& a, const Matrix<double>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("max_abs_diff shape");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double pivot_condition_estimate(const Matrix<double>& m) {
  require_square(m.rows(), m.cols(), "pivot_condition_estimate");
  Matrix<double> a = m;
  const std::size_t n = a.rows();
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(a(r, k)) > std::abs(a(p, k))) p = r;
    const double piv = std::abs(a(p, k));
    if (piv == 0.0) return std::numeric_limits<double>::infinity();
    lo = std::min(lo, piv);
    hi = std::max(hi, piv);
    swap_rows(a, k, p);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return hi / lo;
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double distance(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

template class Matrix<double>;
template class Matrix<Rational>;

template Matrix<double> operator*(const Matrix<double>&, const Matrix<double>&);
template Matrix<Rational> operator*(const Matrix<Rational>&,
                                    const Matrix<Rational>&);
template Vector<double> operator*(const Matrix<double>&, std::span<const double>);
template Vector<Rational> operator*(const Matrix<Rational>&,
                                    std::span<const Rational>);
template Matrix<double> invert(const Matrix<double>&);
template Matrix<Rational> invert(const Matrix<Rational>&);
template double determinant(const Matrix<double>&);
template Rational determinant(const Matrix<Rational>&);
template Vector<double> solve(const Matrix<double>&, std::span<const double>);
template Vector<Rational> solve(const Matrix<Rational>&,
                                std::span<const Rational>);

}  // namespace absorb
