#include <absorb/sweeps.hpp>

#include <absorb/absorption.hpp>
#include <absorb/bodies.hpp>
#include <absorb/constructions.hpp>
#include <absorb/metrics.hpp>
#include <absorb/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <random>
#include <string>

namespace absorb {

namespace {

double rel_dev(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double max_pairwise_rel_dev(std::initializer_list<double> values) {
  double worst = 0.0;
  for (auto a = values.begin(); a != values.end(); ++a)
    for (auto b = a + 1; b != values.end(); ++b) worst = std::max(worst, rel_dev(*a, *b));
  return worst;
}

double inradius_heights_case(const Simplex& s, std::uint64_t) {
  // 1/r from the tangency system, h_j from the Lagrange normals.
  const double inv_r = 1.0 / chebyshev_inradius(s).radius;
  double sum = 0.0;
  for (double h : heights(s)) sum += 1.0 / h;
  return rel_dev(inv_r, sum);
}

double alpha_ball_case(const Simplex& s, std::uint64_t) {
  const ConvexBody ball = ConvexBody::unit_ball(s.dim());
  return max_pairwise_rel_dev({alpha(ball, s).value, alpha_ball_from_normals(s),
                               alpha_ball_from_heights(s), alpha_ball_from_inradius(s),
                               alpha_ball_from_surface(s)});
}

double alpha_cube_case(const Simplex& s, std::uint64_t) {
  const std::size_t n = s.dim();
  const double unit_generic = alpha(ConvexBody::unit_cube(n), s).value;
  const double sym_generic = alpha(ConvexBody::sym_cube(n), s).value;
  const double ball_generic = alpha(ConvexBody::unit_ball(n), s).value;
  const double dev = std::max(
      max_pairwise_rel_dev({unit_generic, alpha_unit_cube_from_coeffs(s),
                            alpha_unit_cube_from_diameters(s)}),
      rel_dev(sym_generic, alpha_sym_cube_from_coeffs(s)));
  // The unit ball sits inside [-1,1]^n, so its translate index is no larger.
  return std::max(dev, std::max(0.0, ball_generic - sym_generic) / sym_generic);
}

double euler_case(const Simplex& s, std::uint64_t) {
  const EulerReport e = euler_check(s);
  return std::max(0.0, -e.gap) / std::max(1.0, e.circumradius);
}

double xi_oracle_case(const Simplex& s, std::uint64_t seed) {
  const std::size_t n = s.dim();
  std::mt19937_64 rng(seed ^ 0xC0FFEEULL);
  std::normal_distribution<double> normal(0.0, 0.5);
  std::uniform_real_distribution<double> uniform(0.5, 1.5);

  ConvexBody body = ConvexBody::unit_ball(n);
  switch (seed % 3) {
    case 0: {
      Point center(n);
      for (auto& x : center) x = normal(rng);
      body = ConvexBody::ball(std::move(center), uniform(rng));
      break;
    }
    case 1: body = ConvexBody::unit_cube(n); break;
    default: body = ConvexBody::sym_cube(n); break;
  }
  return std::abs(xi_bisection(body, s) - xi(body, s).value);
}

using CaseFn = std::function<double(const Simplex&, std::uint64_t)>;

struct SuiteSpec {
  const char* name;
  double tolerance;
  RandomScheme scheme;
  CaseFn run;
};

const std::vector<SuiteSpec>& suites() {
  static const std::vector<SuiteSpec> specs{
      {"corollary1", 1e-9, RandomScheme::Gaussian, inradius_heights_case},
      {"alpha_ball", 1e-8, RandomScheme::Gaussian, alpha_ball_case},
      {"alpha_cube", 1e-9, RandomScheme::Gaussian, alpha_cube_case},
      {"euler", 1e-9, RandomScheme::Gaussian, euler_case},
      {"xi_oracle", 1e-6, RandomScheme::Gaussian, xi_oracle_case},
  };
  return specs;
}

const SuiteSpec& find_suite(std::string_view name) {
  for (const auto& s : suites())
    if (name == s.name) return s;
  throw Error("unknown verification suite: " + std::string(name));
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed * 0x100000001B3ULL + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

double default_suite_tolerance(std::string_view suite) {
  return find_suite(suite).tolerance;
}

SuiteResult run_suite(std::string_view suite, const SweepConfig& config) {
  const SuiteSpec& spec = find_suite(suite);
  if (config.n < 1) throw Error("sweep dimension must be >= 1");
  SuiteResult out;
  out.name = spec.name;
  out.cases = config.cases;
  out.tolerance = config.tol.value_or(spec.tolerance);
  for (std::size_t k = 0; k < config.cases; ++k) {
    const std::uint64_t seed = case_seed(config.seed, k);
    const Simplex s = random_simplex(config.n, seed, spec.scheme);
    const double dev = spec.run(s, seed);
    out.worst_deviation = std::max(out.worst_deviation, dev);
    if (!(dev <= out.tolerance) && out.passed) {
      out.passed = false;
      out.failing_index = k;
      out.failing_simplex = s;
    }
  }
  return out;
}

std::vector<SuiteResult> run_suites(std::string_view suite, const SweepConfig& config) {
  std::vector<SuiteResult> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) out.push_back(run_suite(name, config));
  } else {
    out.push_back(run_suite(suite, config));
  }
  return out;
}

}  // namespace absorb
