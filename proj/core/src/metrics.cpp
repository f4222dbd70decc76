#include <absorb/metrics.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace absorb {

namespace {

std::vector<double> normal_norms(const Simplex& s) {
  const auto& l = s.coeffs();
  std::vector<double> out(s.vertex_count());
  for (std::size_t j = 0; j < s.vertex_count(); ++j) {
    double sq = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i) sq += l.coeff(i, j) * l.coeff(i, j);
    out[j] = std::sqrt(sq);
  }
  return out;
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

// Circumscribed ball of the affine hull of `pts` (center lies in that hull).
// Radius is -1 when the points are affinely dependent.
Ball affine_circumball(const std::vector<const Point*>& pts) {
  const Point& p0 = *pts.front();
  const std::size_t n = p0.size();
  const std::size_t k = pts.size() - 1;
  if (k == 0) return {p0, 0.0};

  std::vector<Point> edges(k, Point(n));
  for (std::size_t e = 0; e < k; ++e)
    for (std::size_t i = 0; i < n; ++i) edges[e][i] = (*pts[e + 1])[i] - p0[i];

  Matrix<double> gram(k, k);
  Vector<double> rhs(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) gram(a, b) = dot(edges[a], edges[b]);
    rhs[a] = 0.5 * gram(a, a);
  }
  Vector<double> mu;
  try {
    mu = solve(gram, std::span<const double>(rhs));
  } catch (const SingularMatrix&) {
    return {p0, -1.0};
  }
  Point center = p0;
  for (std::size_t e = 0; e < k; ++e)
    for (std::size_t i = 0; i < n; ++i) center[i] += mu[e] * edges[e][i];
  const double radius = distance(center, p0);
  return {std::move(center), radius};
}

}  // namespace

std::vector<double> heights(const Simplex& s) {
  std::vector<double> h = normal_norms(s);
  for (auto& x : h) x = 1.0 / x;
  return h;
}

template <class T>
std::vector<T> axial_diameters(const BasicSimplex<T>& s) {
  const auto& l = s.coeffs();
  std::vector<T> d(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    T sum(0);
    for (std::size_t j = 0; j < s.vertex_count(); ++j) {
      const T& v = l.coeff(i, j);
      sum += v < 0 ? T(-v) : v;
    }
    d[i] = T(2) / sum;
  }
  return d;
}

Ball inscribed_ball(const Simplex& s) {
  const std::vector<double> norms = normal_norms(s);
  double total = 0.0;
  for (double v : norms) total += v;
  const double r = 1.0 / total;
  Point z(s.dim(), 0.0);
  for (std::size_t j = 0; j < s.vertex_count(); ++j)
    for (std::size_t i = 0; i < s.dim(); ++i) z[i] += norms[j] * s.vertex(j)[i];
  for (auto& x : z) x *= r;
  return {std::move(z), r};
}

std::vector<Point> tangent_points(const Simplex& s) {
  const Ball in = inscribed_ball(s);
  const std::vector<double> norms = normal_norms(s);
  const auto& l = s.coeffs();
  std::vector<Point> out;
  out.reserve(s.vertex_count());
  for (std::size_t k = 0; k < s.vertex_count(); ++k) {
    Point y = in.center;
    const double f = in.radius / norms[k];
    for (std::size_t i = 0; i < s.dim(); ++i) y[i] -= f * l.coeff(i, k);
    out.push_back(std::move(y));
  }
  return out;
}

std::vector<double> facet_measures(const Simplex& s) {
  const std::size_t n = s.dim();
  std::vector<double> out(s.vertex_count(), 1.0);
  if (n == 1) return out;

  for (std::size_t j = 0; j < s.vertex_count(); ++j) {
    std::vector<const Point*> facet;
    for (std::size_t k = 0; k < s.vertex_count(); ++k)
      if (k != j) facet.push_back(&s.vertex(k));
    const Point& base = *facet.front();
    std::vector<Point> edges;
    for (std::size_t e = 1; e < facet.size(); ++e) {
      Point v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = (*facet[e])[i] - base[i];
      edges.push_back(std::move(v));
    }
    Matrix<double> gram(n - 1, n - 1);
    for (std::size_t a = 0; a < n - 1; ++a)
      for (std::size_t b = 0; b < n - 1; ++b) gram(a, b) = dot(edges[a], edges[b]);
    out[j] = std::sqrt(std::max(0.0, determinant(gram))) / factorial(n - 1);
  }
  return out;
}

Ball circumball(const Simplex& s) {
  const std::size_t n = s.dim();
  if (n > kMaxCircumballDim)
    throw DimensionTooLarge("circumball supports n <= " +
                            std::to_string(kMaxCircumballDim));
  const std::size_t m = s.vertex_count();
  const auto& verts = s.vertices();

  double scale = 0.0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      scale = std::max(scale, distance(verts[a], verts[b]));
  const double slack = 1e-9 * scale;

  Ball best{Point(n, 0.0), std::numeric_limits<double>::infinity()};
  std::vector<const Point*> subset;
  for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
    if (std::popcount(mask) < 2) continue;
    subset.clear();
    for (std::size_t k = 0; k < m; ++k)
      if (mask & (1UL << k)) subset.push_back(&verts[k]);
    Ball candidate = affine_circumball(subset);
    if (candidate.radius < 0.0 || candidate.radius >= best.radius) continue;
    bool encloses = true;
    for (const auto& v : verts)
      if (distance(v, candidate.center) > candidate.radius + slack) {
        encloses = false;
        break;
      }
    if (encloses) best = std::move(candidate);
  }
  return best;
}

EulerReport euler_check(const Simplex& s) {
  const double big_r = circumball(s).radius;
  const double nr = static_cast<double>(s.dim()) * inscribed_ball(s).radius;
  return {big_r, nr, big_r - nr};
}

bool is_regular(const Simplex& s, double tol) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  const auto& v = s.vertices();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      const double d = distance(v[a], v[b]);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  return hi - lo <= tol * hi;
}

SimplexMetrics compute_metrics(const Simplex& s) {
  SimplexMetrics m;
  m.volume = s.volume();
  m.heights = heights(s);
  m.axial_diameters = axial_diameters(s);
  const Ball in = inscribed_ball(s);
  m.inradius = in.radius;
  m.incenter = in.center;
  m.tangent_points = tangent_points(s);
  const Ball out = circumball(s);
  m.circumradius = out.radius;
  m.circumcenter = out.center;
  m.facet_measures = facet_measures(s);
  for (double f : m.facet_measures) m.surface += f;
  m.euler = {out.radius, static_cast<double>(s.dim()) * in.radius,
             out.radius - static_cast<double>(s.dim()) * in.radius};
  m.regular = is_regular(s);
  return m;
}

template std::vector<double> axial_diameters(const BasicSimplex<double>&);
template std::vector<Rational> axial_diameters(const BasicSimplex<Rational>&);

}  // namespace absorb
