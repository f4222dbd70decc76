#include <absorb/constructions.hpp>

#include <absorb/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>

namespace absorb {

template <class T>
BasicSimplex<T> standard_simplex(std::size_t n) {
  if (n == 0) throw DimensionMismatch("dimension must be >= 1");
  std::vector<BasicPoint<T>> v(n + 1, BasicPoint<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) v[i + 1][i] = T(1);
  return BasicSimplex<T>(std::move(v));
}

Simplex regular_inscribed_simplex(std::size_t n) {
  if (n == 0) throw DimensionMismatch("dimension must be >= 1");
  // Express e_k - (1/(n+1)) 1 in R^{n+1} in the Helmert basis of the
  // hyperplane sum = 0, then scale to unit length.
  const double scale = std::sqrt(static_cast<double>(n + 1) / static_cast<double>(n));
  std::vector<Point> v(n + 1, Point(n, 0.0));
  for (std::size_t m = 1; m <= n; ++m) {
    const double md = static_cast<double>(m);
    const double inv = 1.0 / std::sqrt(md * (md + 1.0));
    for (std::size_t k = 0; k < m; ++k) v[k][m - 1] = scale * inv;
    v[m][m - 1] = -scale * md * inv;
  }
  return Simplex(std::move(v));
}

HadamardMatrix::HadamardMatrix(std::size_t order, std::vector<int> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ == 0 || entries_.size() != order_ * order_)
    throw Error("Hadamard matrix shape mismatch");
  for (int e : entries_)
    if (e != 1 && e != -1) throw Error("Hadamard entries must be +-1");
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) {
      long s = 0;
      for (std::size_t k = 0; k < order_; ++k) s += (*this)(a, k) * (*this)(b, k);
      const long expected = a == b ? static_cast<long>(order_) : 0;
      if (s != expected) throw Error("H H^T != m I");
    }
}

namespace {

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

struct PrimePower {
  std::size_t p = 0;
  std::size_t k = 0;
};

std::optional<PrimePower> prime_power(std::size_t q) {
  if (q < 2) return std::nullopt;
  std::size_t p = 2;
  while (q % p != 0) ++p;
  std::size_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, k};
}

std::vector<int> sylvester(std::size_t order) {
  std::vector<int> h{1};
  std::size_t m = 1;
  while (m < order) {
    std::vector<int> next(4 * m * m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        const int e = h[r * m + c];
        next[r * 2 * m + c] = e;
        next[r * 2 * m + c + m] = e;
        next[(r + m) * 2 * m + c] = e;
        next[(r + m) * 2 * m + c + m] = -e;
      }
    h = std::move(next);
    m *= 2;
  }
  return h;
}

// GF(p^k) with elements encoded as base-p digit strings of polynomial
// coefficients, reduced modulo a monic irreducible of degree k.
class FiniteField {
public:
  explicit FiniteField(PrimePower pk) : p_(pk.p), k_(pk.k) {
    size_ = 1;
    for (std::size_t i = 0; i < k_; ++i) size_ *= p_;
    modulus_ = find_irreducible();
  }

  std::size_t size() const { return size_; }

  std::size_t sub(std::size_t a, std::size_t b) const {
    std::size_t out = 0;
    std::size_t place = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      out += ((a % p_ + p_ - b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return out;
  }

  std::size_t mul(std::size_t a, std::size_t b) const {
    return encode(reduce(multiply(decode(a), decode(b)), modulus_));
  }

private:
  using Poly = std::vector<std::size_t>;  // low degree first

  Poly decode(std::size_t a) const {
    Poly out(k_);
    for (auto& c : out) {
      c = a % p_;
      a /= p_;
    }
    return out;
  }

  std::size_t encode(const Poly& poly) const {
    std::size_t out = 0;
    for (std::size_t i = poly.size(); i-- > 0;) out = out * p_ + poly[i];
    return out;
  }

  Poly multiply(const Poly& a, const Poly& b) const {
    Poly out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
    return out;
  }

  // Remainder of a modulo the monic polynomial m, padded to deg(m) coefficients.
  Poly reduce(Poly a, const Poly& m) const {
    const std::size_t d = m.size() - 1;
    for (std::size_t i = a.size(); i-- > d;) {
      const std::size_t lead = a[i];
      if (lead == 0) continue;
      for (std::size_t t = 0; t <= d; ++t)
        a[i - d + t] = (a[i - d + t] + (p_ - lead) * m[t]) % p_;
    }
    a.resize(d);
    return a;
  }

  Poly monic(std::size_t degree, std::size_t low) const {
    Poly poly(degree + 1, 0);
    for (std::size_t i = 0; i < degree; ++i) {
      poly[i] = low % p_;
      low /= p_;
    }
    poly[degree] = 1;
    return poly;
  }

  Poly find_irreducible() const {
    for (std::size_t low = 0; low < size_; ++low) {
      const Poly candidate = monic(k_, low);
      bool irreducible = true;
      for (std::size_t d = 1; irreducible && 2 * d <= k_; ++d) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p_;
        for (std::size_t f = 0; f < count; ++f) {
          const Poly r = reduce(candidate, monic(d, f));
          if (std::all_of(r.begin(), r.end(), [](std::size_t c) { return c == 0; })) {
            irreducible = false;
            break;
          }
        }
      }
      if (irreducible) return candidate;
    }
    throw Error("no irreducible polynomial found");
  }

  std::size_t p_;
  std::size_t k_;
  std::size_t size_ = 1;
  Poly modulus_;
};

// H = I + [[0, 1^T], [-1, Q]] with Q_ij = chi(x_j - x_i), chi the quadratic
// character of GF(q).
std::vector<int> paley_one(std::size_t q) {
  const FiniteField field(*prime_power(q));
  std::vector<int> chi(q, -1);
  chi[0] = 0;
  for (std::size_t x = 1; x < q; ++x) chi[field.mul(x, x)] = 1;

  const std::size_t m = q + 1;
  std::vector<int> h(m * m, 0);
  for (std::size_t c = 1; c < m; ++c) h[c] = 1;
  for (std::size_t r = 1; r < m; ++r) h[r * m] = -1;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) h[(i + 1) * m + (j + 1)] = chi[field.sub(j, i)];
  for (std::size_t d = 0; d < m; ++d) h[d * m + d] += 1;
  return h;
}

}  // namespace

bool hadamard_order_supported(std::size_t order) {
  if (is_power_of_two(order)) return true;
  return order >= 4 && (order - 1) % 4 == 3 && prime_power(order - 1).has_value();
}

HadamardMatrix hadamard(std::size_t order) {
  if (is_power_of_two(order)) return HadamardMatrix(order, sylvester(order));
  if (hadamard_order_supported(order)) return HadamardMatrix(order, paley_one(order - 1));
  throw UnsupportedOrder("no Sylvester or Paley I Hadamard matrix of order " +
                         std::to_string(order));
}

template <class T>
BasicSimplex<T> hadamard_simplex(std::size_t n) {
  if (n == 0) throw DimensionMismatch("dimension must be >= 1");
  const HadamardMatrix h = hadamard(n + 1);
  const std::size_t m = n + 1;
  std::vector<BasicPoint<T>> v(m, BasicPoint<T>(n, T(0)));
  for (std::size_t r = 0; r < m; ++r) {
    // Negate the row if needed so the last column is all ones.
    const int sign = h(r, m - 1);
    for (std::size_t c = 0; c < n; ++c) v[r][c] = T(sign * h(r, c) > 0 ? 1 : 0);
  }
  return BasicSimplex<T>(std::move(v));
}

RandomScheme parse_random_scheme(std::string_view name) {
  if (name == "unit_cube_vertices") return RandomScheme::UnitCubeVertices;
  if (name == "gaussian") return RandomScheme::Gaussian;
  if (name == "in_ball") return RandomScheme::InBall;
  throw Error("unknown random scheme: " + std::string(name));
}

std::string to_string(RandomScheme scheme) {
  switch (scheme) {
    case RandomScheme::UnitCubeVertices: return "unit_cube_vertices";
    case RandomScheme::Gaussian: return "gaussian";
    case RandomScheme::InBall: return "in_ball";
  }
  return "unknown";
}

Simplex random_simplex(std::size_t n, std::uint64_t seed, RandomScheme scheme) {
  if (n == 0) throw DimensionMismatch("dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);

  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Point> v(n + 1, Point(n));
    for (auto& p : v)
      for (auto& x : p) x = scheme == RandomScheme::UnitCubeVertices ? uniform(rng) : normal(rng);
    try {
      Simplex s(std::move(v));
      if (scheme != RandomScheme::InBall) return s;
      const Ball b = circumball(s);
      std::vector<Point> scaled = s.vertices();
      for (auto& p : scaled)
        for (std::size_t i = 0; i < n; ++i) p[i] = (p[i] - b.center[i]) / b.radius;
      return Simplex(std::move(scaled));
    } catch (const DegenerateSimplex&) {
      continue;
    }
  }
  throw GenerationFailed("no nondegenerate simplex after " +
                         std::to_string(kMaxAttempts) + " attempts");
}

template BasicSimplex<double> standard_simplex(std::size_t);
template BasicSimplex<Rational> standard_simplex(std::size_t);
template BasicSimplex<double> hadamard_simplex(std::size_t);
template BasicSimplex<Rational> hadamard_simplex(std::size_t);

}  // namespace absorb
