#pragma once

#include <absorb/simplex.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace absorb {

/// Vertices 0, e_1, ..., e_n.
template <class T>
BasicSimplex<T> standard_simplex(std::size_t n);

/// Regular simplex inscribed in the unit ball: unit-norm vertices with
/// pairwise inner products -1/n and centroid at the origin. Deterministic.
Simplex regular_inscribed_simplex(std::size_t n);

class HadamardMatrix {
public:
  /// Validates entries in {-1, +1} and H H^T = m I; throws Error otherwise.
  HadamardMatrix(std::size_t order, std::vector<int> entries);

  std::size_t order() const { return order_; }
  int operator()(std::size_t r, std::size_t c) const { return entries_[r * order_ + c]; }
  const std::vector<int>& entries() const { return entries_; }

private:
  std::size_t order_;
  std::vector<int> entries_;
};

/// Sylvester for orders 2^k (including 1), Paley I for q+1 with q prime and
/// q = 3 mod 4. Throws UnsupportedOrder for anything else.
HadamardMatrix hadamard(std::size_t order);

bool hadamard_order_supported(std::size_t order);

/// Regular simplex with vertices at vertices of [0,1]^n, built from a
/// Hadamard matrix of order n+1. Throws UnsupportedOrder.
template <class T>
BasicSimplex<T> hadamard_simplex(std::size_t n);

enum class RandomScheme {
  UnitCubeVertices,  // coordinates uniform in [0,1], so S lies in Q_n
  Gaussian,          // coordinates standard normal
  InBall,            // Gaussian, then normalized so the circumball is B_n
};

RandomScheme parse_random_scheme(std::string_view name);
std::string to_string(RandomScheme scheme);

/// Deterministic for a given (n, seed, scheme). Degenerate draws are
/// resampled; throws GenerationFailed after 100 attempts.
Simplex random_simplex(std::size_t n, std::uint64_t seed,
                       RandomScheme scheme = RandomScheme::Gaussian);

extern template BasicSimplex<double> standard_simplex(std::size_t);
extern template BasicSimplex<Rational> standard_simplex(std::size_t);
extern template BasicSimplex<double> hadamard_simplex(std::size_t);
extern template BasicSimplex<Rational> hadamard_simplex(std::size_t);

}  // namespace absorb
