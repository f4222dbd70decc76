#pragma once

// Randomized cross-validation sweeps. Each suite draws `cases` seeded random
// simplices, evaluates two or more independent routes to the same quantity
// and records the worst deviation between them.

#include <absorb/simplex.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace absorb {

struct SweepConfig {
  std::size_t n = 3;
  std::size_t cases = 200;
  std::uint64_t seed = 1;
  /// Overrides every suite's default tolerance when set.
  std::optional<double> tol;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  double worst_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  /// First case whose deviation exceeded the tolerance.
  std::optional<std::size_t> failing_index;
  std::optional<Simplex> failing_simplex;
};

/// corollary1, alpha_ball, alpha_cube, euler, xi_oracle
const std::vector<std::string>& suite_names();

double default_suite_tolerance(std::string_view suite);

/// Throws Error for an unknown suite name.
SuiteResult run_suite(std::string_view suite, const SweepConfig& config);

/// Runs one suite, or every suite for "all", in suite_names() order.
std::vector<SuiteResult> run_suites(std::string_view suite, const SweepConfig& config);

/// Seed for case `index` of a sweep; exposed so failures can be replayed.
std::uint64_t case_seed(std::uint64_t seed, std::size_t index);

}  // namespace absorb
