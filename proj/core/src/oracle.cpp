#include <absorb/oracle.hpp>

#include <absorb/metrics.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace absorb {

FacetFrames::FacetFrames(const Simplex& s) : dim_(s.dim()) {
  const std::size_t n = s.dim();
  const auto& verts = s.vertices();
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      diameter_ = std::max(diameter_, distance(verts[a], verts[b]));

  for (std::size_t j = 0; j < verts.size(); ++j) {
    std::vector<const Point*> facet;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (k != j) facet.push_back(&verts[k]);
    const Point& base = *facet.front();

    std::vector<Point> edges;
    for (std::size_t e = 1; e < facet.size(); ++e) {
      Point v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = (*facet[e])[i] - base[i];
      edges.push_back(std::move(v));
    }
    Point w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = verts[j][i] - base[i];

    // Orthonormalize the facet edges, then strip their span from w. Two
    // passes of modified Gram-Schmidt keep the normal accurate on thin facets.
    std::vector<Point> basis;
    for (auto& e : edges) {
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : basis) {
          const double c = dot(q, e);
          for (std::size_t i = 0; i < n; ++i) e[i] -= c * q[i];
        }
      const double len = norm(e);
      if (!(len > 0.0)) throw DegenerateSimplex("facet vertices are affinely dependent");
      for (auto& x : e) x /= len;
      basis.push_back(std::move(e));
    }
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) {
        const double c = dot(q, w);
        for (std::size_t i = 0; i < n; ++i) w[i] -= c * q[i];
      }
    const double h = norm(w);
    if (!(h > 0.0)) throw DegenerateSimplex("vertex lies on its opposite facet");
    for (auto& x : w) x /= h;
    bases_.push_back(base);
    normals_.push_back(std::move(w));
    heights_.push_back(h);
  }
}

double FacetFrames::signed_distance(std::size_t j, std::span<const double> x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) s += (x[i] - bases_[j][i]) * normals_[j][i];
  return s;
}

namespace {

ContainmentReport finish(std::vector<double> slack, double allowed) {
  ContainmentReport out;
  const auto it = std::min_element(slack.begin(), slack.end());
  out.margin = *it;
  out.contained = out.margin >= -allowed;
  if (!out.contained) out.violating_facet = static_cast<std::size_t>(it - slack.begin());
  return out;
}

}  // namespace

ContainmentReport ball_in_simplex(const Point& center, double radius, const Simplex& s,
                                  double tol) {
  if (center.size() != s.dim()) throw DimensionMismatch("ball center dimension");
  const FacetFrames frames(s);
  std::vector<double> slack(frames.facet_count());
  for (std::size_t j = 0; j < slack.size(); ++j)
    slack[j] = frames.signed_distance(j, center) - radius;
  return finish(std::move(slack), tol * std::max({1.0, radius, frames.diameter()}));
}

ContainmentReport cube_in_simplex(const ConvexBody& cube, const Simplex& s, double tol) {
  if (cube.kind() != BodyKind::Cube) throw Error("cube_in_simplex needs a cube body");
  if (cube.dim() != s.dim()) throw DimensionMismatch("cube and simplex dimensions differ");
  const std::size_t n = s.dim();
  if (n > kMaxCubeEnumerationDim)
    throw DimensionTooLarge("cube enumeration supports n <= " +
                            std::to_string(kMaxCubeEnumerationDim));
  const FacetFrames frames(s);
  const double h = cube.radius();

  // Walk the cube vertices in Gray-code order, updating every facet's signed
  // distance by one coordinate flip at a time.
  Point corner(n);
  for (std::size_t i = 0; i < n; ++i) corner[i] = cube.center()[i] - h;
  std::vector<double> current(frames.facet_count());
  std::vector<double> slack(frames.facet_count());
  for (std::size_t j = 0; j < current.size(); ++j)
    slack[j] = current[j] = frames.signed_distance(j, corner);

  std::vector<bool> upper(n, false);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    const std::size_t bit = static_cast<std::size_t>(std::countr_zero(step));
    const double delta = upper[bit] ? -2.0 * h : 2.0 * h;
    upper[bit] = !upper[bit];
    for (std::size_t j = 0; j < current.size(); ++j) {
      current[j] += delta * frames.normal(j)[bit];
      slack[j] = std::min(slack[j], current[j]);
    }
  }
  return finish(std::move(slack),
                tol * std::max({1.0, 2.0 * h * std::sqrt(double(n)), frames.diameter()}));
}

ContainmentReport body_in_simplex(const ConvexBody& body, const Simplex& s, double tol) {
  if (body.kind() == BodyKind::Ball)
    return ball_in_simplex(body.center(), body.radius(), s, tol);
  return cube_in_simplex(body, s, tol);
}

double xi_bisection(const ConvexBody& body, const Simplex& s, double width) {
  auto contains_at = [&](double tau) {
    return body_in_simplex(body, s.dilate(tau), 0.0).contained;
  };
  if (contains_at(1.0)) return 1.0;

  double lo = 1.0;
  double hi = 2.0;
  while (!contains_at(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e15) throw Error("xi_bisection: no containing dilate found");
  }
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    (contains_at(mid) ? hi : lo) = mid;
  }
  return hi;
}

InscribedBall chebyshev_inradius(const Simplex& s) {
  const FacetFrames frames(s);
  const std::size_t n = s.dim();
  Matrix<double> m(n + 1, n + 1);
  Vector<double> rhs(n + 1);
  // Unknowns are (z - c, r) with c the centroid, which keeps the right-hand
  // side small for simplices far from the origin.
  const Point c = s.centroid();
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(j, i) = frames.normal(j)[i];
    m(j, n) = -1.0;
    rhs[j] = -frames.signed_distance(j, c);
  }
  Vector<double> sol = solve(m, std::span<const double>(rhs));
  // One step of iterative refinement with an extended-precision residual.
  Vector<double> residual(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    long double acc = rhs[j];
    for (std::size_t i = 0; i <= n; ++i)
      acc -= static_cast<long double>(m(j, i)) * sol[i];
    residual[j] = static_cast<double>(acc);
  }
  const Vector<double> delta = solve(m, std::span<const double>(residual));
  for (std::size_t i = 0; i <= n; ++i) sol[i] += delta[i];
  for (std::size_t i = 0; i < n; ++i) sol[i] += c[i];
  return {Point(sol.begin(), sol.begin() + static_cast<long>(n)), sol[n]};
}

namespace {

// Length of {t : p + t e_axis in S}; zero when p is outside or the line misses.
double chord_length(const FacetFrames& frames, const Point& p, std::size_t axis) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < frames.facet_count(); ++j) {
    const double d = frames.signed_distance(j, p);
    const double slope = frames.normal(j)[axis];
    if (slope > 0.0) {
      lo = std::max(lo, -d / slope);
    } else if (slope < 0.0) {
      hi = std::min(hi, -d / slope);
    } else if (d < 0.0) {
      return 0.0;
    }
  }
  return hi > lo ? hi - lo : 0.0;
}

Point combine(const Simplex& s, const std::vector<double>& weights) {
  Point p(s.dim(), 0.0);
  for (std::size_t j = 0; j < weights.size(); ++j)
    for (std::size_t i = 0; i < s.dim(); ++i) p[i] += weights[j] * s.vertex(j)[i];
  return p;
}

// Visits every weight vector k/resolution with sum 1.
template <class Fn>
void for_each_grid_point(std::size_t parts, std::size_t resolution, Fn&& fn) {
  std::vector<std::size_t> counts(parts, 0);
  std::vector<double> weights(parts, 0.0);
  const double inv = 1.0 / static_cast<double>(resolution);
  auto rec = [&](auto&& self, std::size_t idx, std::size_t remaining) -> void {
    if (idx + 1 == parts) {
      counts[idx] = remaining;
      for (std::size_t k = 0; k < parts; ++k) weights[k] = static_cast<double>(counts[k]) * inv;
      fn(weights);
      return;
    }
    for (std::size_t c = 0; c <= remaining; ++c) {
      counts[idx] = c;
      self(self, idx + 1, remaining - c);
    }
  };
  rec(rec, 0, resolution);
}

}  // namespace

double axial_diameter_bruteforce(const Simplex& s, std::size_t axis,
                                 std::size_t resolution) {
  if (axis >= s.dim()) throw DimensionMismatch("axis index out of range");
  if (resolution == 0) throw Error("grid resolution must be positive");
  const FacetFrames frames(s);
  const std::size_t parts = s.vertex_count();

  std::vector<double> best_weights(parts, 0.0);
  double best = -1.0;
  for_each_grid_point(parts, resolution, [&](const std::vector<double>& w) {
    const double len = chord_length(frames, combine(s, w), axis);
    if (len > best) {
      best = len;
      best_weights = w;
    }
  });

  // Chord length is concave in the base point, so a local pattern search from
  // the best grid point climbs toward the maximum. Moves shift weight between
  // two vertices, plus random directions to slip past ridges.
  std::mt19937_64 rng(0x5eed + axis);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> trial(parts);
  auto try_move = [&](const std::vector<double>& dir, double step) {
    for (std::size_t k = 0; k < parts; ++k) {
      trial[k] = best_weights[k] + step * dir[k];
      if (trial[k] < 0.0) return false;
    }
    const double len = chord_length(frames, combine(s, trial), axis);
    if (len > best) {
      best = len;
      best_weights = trial;
      return true;
    }
    return false;
  };

  std::vector<double> dir(parts);
  for (double step = 1.0 / static_cast<double>(resolution); step > 1e-13;) {
    bool improved = false;
    for (std::size_t a = 0; a < parts; ++a)
      for (std::size_t b = 0; b < parts; ++b) {
        if (a == b) continue;
        std::fill(dir.begin(), dir.end(), 0.0);
        dir[a] = 1.0;
        dir[b] = -1.0;
        improved |= try_move(dir, step);
      }
    for (int r = 0; r < 4 * static_cast<int>(parts); ++r) {
      double mean = 0.0;
      for (auto& d : dir) mean += (d = normal(rng));
      mean /= static_cast<double>(parts);
      double len = 0.0;
      for (auto& d : dir) {
        d -= mean;
        len += d * d;
      }
      len = std::sqrt(len);
      for (auto& d : dir) d /= len;
      improved |= try_move(dir, step);
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

CubeSandwichReport cube_sandwich_check(const Simplex& s, double tol) {
  const std::size_t n = s.dim();
  CubeSandwichReport out;
  out.simplex_in_cube = true;
  for (const auto& v : s.vertices())
    for (double x : v)
      if (x < -tol || x > 1.0 + tol) out.simplex_in_cube = false;
  if (!out.simplex_in_cube) throw PreconditionFailed("simplex is not inside the unit cube");

  const double nd = static_cast<double>(n);
  const Simplex dilated = s.dilate(nd);
  out.cube_in_dilate = cube_in_simplex(ConvexBody::unit_cube(n), dilated, tol).contained;
  if (!out.cube_in_dilate)
    throw PreconditionFailed("unit cube is not inside the n-fold dilate of the simplex");

  out.regular = is_regular(s);
  const ContainmentReport ball =
      ball_in_simplex(Point(n, 0.5), std::sqrt(nd) / 2.0, dilated, tol);
  out.ball_in_dilate = ball.contained;
  out.ball_margin = ball.margin;
  out.implication_holds = out.regular || !out.ball_in_dilate;
  return out;
}

}  // namespace absorb
