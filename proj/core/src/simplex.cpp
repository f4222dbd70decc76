#include <absorb/simplex.hpp>

#include <cmath>
#include <string>
#include <utility>

namespace absorb {

template <class T>
LagrangeCoeffs<T>::LagrangeCoeffs(Matrix<T> inverse) : inverse_(std::move(inverse)) {
  if (!inverse_.square() || inverse_.rows() < 2)
    throw DimensionMismatch("Lagrange coefficient matrix must be (n+1)x(n+1)");
}

template <class T>
Vector<T> LagrangeCoeffs<T>::normal(std::size_t j) const {
  Vector<T> a(dim());
  for (std::size_t i = 0; i < dim(); ++i) a[i] = inverse_(i, j);
  return a;
}

template <class T>
T LagrangeCoeffs<T>::eval(std::size_t j, std::span<const T> x) const {
  T v = offset(j);
  for (std::size_t i = 0; i < dim(); ++i) v += inverse_(i, j) * x[i];
  return v;
}

namespace {

template <class T>
Matrix<T> bordered(const std::vector<BasicPoint<T>>& vertices) {
  const std::size_t m = vertices.size();
  Matrix<T> a(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c + 1 < m; ++c) a(r, c) = vertices[r][c];
    a(r, m - 1) = T(1);
  }
  return a;
}

template <class T>
T factorial(std::size_t n) {
  T f(1);
  for (std::size_t k = 2; k <= n; ++k) f *= T(static_cast<long>(k));
  return f;
}

}  // namespace

template <class T>
BasicSimplex<T>::BasicSimplex(std::vector<BasicPoint<T>> vertices)
    : vertices_(std::move(vertices)), det_(0), cache_(std::make_shared<Cache>()) {
  if (vertices_.size() < 2)
    throw DimensionMismatch("a simplex needs n+1 >= 2 vertices");
  const std::size_t n = vertices_.size() - 1;
  for (const auto& v : vertices_)
    if (v.size() != n)
      throw DimensionMismatch("expected " + std::to_string(n + 1) +
                              " points of dimension " + std::to_string(n));

  det_ = determinant(bordered(vertices_));
  if constexpr (is_rational_v<T>) {
    if (det_ == 0) throw DegenerateSimplex("vertex matrix is singular");
  } else {
    double biggest = 0.0;
    for (const auto& v : vertices_)
      for (double x : v) {
        if (!std::isfinite(x)) throw DegenerateSimplex("non-finite vertex coordinate");
        biggest = std::max(biggest, std::abs(x));
      }
    const double threshold = 1e-12 * std::pow(biggest + 1.0, static_cast<double>(n));
    if (!(std::abs(det_) >= threshold))
      throw DegenerateSimplex("|det A| below degeneracy threshold");
  }
}

template <class T>
Matrix<T> BasicSimplex<T>::vertex_matrix() const {
  return bordered(vertices_);
}

template <class T>
const LagrangeCoeffs<T>& BasicSimplex<T>::coeffs() const {
  std::call_once(cache_->once, [this] {
    try {
      cache_->coeffs.emplace(invert(bordered(vertices_)));
    } catch (const SingularMatrix& e) {
      throw DegenerateSimplex(std::string("cannot invert vertex matrix: ") + e.what());
    }
  });
  return *cache_->coeffs;
}

template <class T>
T BasicSimplex<T>::lagrange(std::size_t j, std::span<const T> x) const {
  if (x.size() != dim()) throw DimensionMismatch("point dimension");
  return coeffs().eval(j, x);
}

template <class T>
Vector<T> BasicSimplex<T>::barycentric(std::span<const T> x) const {
  if (x.size() != dim()) throw DimensionMismatch("point dimension");
  const auto& l = coeffs();
  Vector<T> out(vertex_count());
  for (std::size_t j = 0; j < vertex_count(); ++j) out[j] = l.eval(j, x);
  return out;
}

template <class T>
T BasicSimplex<T>::volume() const {
  T d = det_;
  if (d < 0) d = -d;
  return d / factorial<T>(dim());
}

template <class T>
BasicPoint<T> BasicSimplex<T>::centroid() const {
  BasicPoint<T> c(dim(), T(0));
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < dim(); ++i) c[i] += v[i];
  const T count(static_cast<long>(vertex_count()));
  for (auto& x : c) x /= count;
  return c;
}

template <class T>
BasicSimplex<T> BasicSimplex<T>::dilate(const T& tau) const {
  if (tau == 0) throw DegenerateSimplex("dilation by zero");
  const BasicPoint<T> c = centroid();
  std::vector<BasicPoint<T>> out = vertices_;
  for (auto& v : out)
    for (std::size_t i = 0; i < dim(); ++i) v[i] = c[i] + tau * (v[i] - c[i]);
  return BasicSimplex(std::move(out));
}

template <class T>
BasicSimplex<T> BasicSimplex<T>::translate(std::span<const T> shift) const {
  if (shift.size() != dim()) throw DimensionMismatch("translation dimension");
  std::vector<BasicPoint<T>> out = vertices_;
  for (auto& v : out)
    for (std::size_t i = 0; i < dim(); ++i) v[i] += shift[i];
  return BasicSimplex(std::move(out));
}

RationalSimplex to_rational(const Simplex& s) {
  std::vector<BasicPoint<Rational>> out;
  out.reserve(s.vertex_count());
  for (const auto& v : s.vertices()) {
    BasicPoint<Rational> p;
    p.reserve(v.size());
    for (double x : v) p.push_back(rational_from_decimal_double(x));
    out.push_back(std::move(p));
  }
  return RationalSimplex(std::move(out));
}

Simplex to_float(const RationalSimplex& s) {
  std::vector<Point> out;
  out.reserve(s.vertex_count());
  for (const auto& v : s.vertices()) {
    Point p;
    p.reserve(v.size());
    for (const auto& x : v) p.push_back(to_double(x));
    out.push_back(std::move(p));
  }
  return Simplex(std::move(out));
}

template class LagrangeCoeffs<double>;
template class LagrangeCoeffs<Rational>;
template class BasicSimplex<double>;
template class BasicSimplex<Rational>;

}  // namespace absorb
