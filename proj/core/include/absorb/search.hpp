#pragma once

// Multistart derivative-free search for simplices with small absorption
// index inside a fixed body: xi(Q_n;S) over S in Q_n, or xi(B_n;S) over
// S in B_n.

#include <absorb/simplex.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace absorb {

inline constexpr std::size_t kMaxSearchDim = 6;

enum class SearchBody { Ball, Cube };

SearchBody parse_search_body(std::string_view name);
std::string to_string(SearchBody body);

struct SearchConfig {
  std::size_t n = 2;
  SearchBody body = SearchBody::Cube;
  std::size_t restarts = 50;
  /// Objective evaluations allowed per restart.
  std::size_t max_iters = 20000;
  double initial_step = 0.25;
  /// Step multiplier applied after a sweep without improvement.
  double decay = 0.5;
  double min_step = 1e-10;
  std::uint64_t seed = 1;
  /// Worker threads for restarts; 0 picks the hardware concurrency.
  std::size_t threads = 0;

  /// Throws Error on an invalid combination.
  void validate() const;
};

struct SearchTrace {
  std::size_t restart = 0;
  std::size_t iteration = 0;
  double value = 0.0;
};

struct SearchResult {
  double best_value = 0.0;
  Simplex best_simplex;
  std::size_t best_restart = 0;
  std::vector<double> restart_best;
  /// Every accepted improvement, ordered by (restart, iteration).
  std::vector<SearchTrace> history;
  std::size_t iterations = 0;
};

/// Raised when an iterate reports xi < n - 1e-9, which the lower bounds for
/// both bodies rule out.
class BoundViolation : public Error {
public:
  using Error::Error;
};

SearchResult minimize_xi(const SearchConfig& config);

}  // namespace absorb
