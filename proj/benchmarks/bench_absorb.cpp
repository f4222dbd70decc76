#include <absorb/absorption.hpp>
#include <absorb/constructions.hpp>
#include <absorb/metrics.hpp>
#include <absorb/oracle.hpp>
#include <absorb/search.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace absorb;

void BM_XiBall(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Simplex s = random_simplex(n, 1);
  const ConvexBody ball = ConvexBody::unit_ball(n);
  for (auto _ : state) {
    // Fresh copy each time so the cached coefficients are recomputed.
    const Simplex fresh(s.vertices());
    benchmark::DoNotOptimize(xi(ball, fresh).value);
  }
}
BENCHMARK(BM_XiBall)->DenseRange(2, 10, 4);

void BM_XiCubeRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RationalSimplex s = hadamard_simplex<Rational>(n);
  const RationalConvexBody cube = RationalConvexBody::unit_cube(n);
  for (auto _ : state) {
    const RationalSimplex fresh(s.vertices());
    benchmark::DoNotOptimize(xi(cube, fresh).value);
  }
}
BENCHMARK(BM_XiCubeRational)->Arg(3)->Arg(7)->Arg(11);

void BM_AlphaClosedForms(benchmark::State& state) {
  const Simplex s = random_simplex(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha_ball_from_heights(s));
    benchmark::DoNotOptimize(alpha_unit_cube_from_coeffs(s));
  }
}
BENCHMARK(BM_AlphaClosedForms)->Arg(3)->Arg(8);

void BM_Circumball(benchmark::State& state) {
  const Simplex s = random_simplex(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(circumball(s).radius);
}
BENCHMARK(BM_Circumball)->DenseRange(2, 8, 2);

void BM_XiBisection(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Simplex s = random_simplex(n, 4);
  const ConvexBody cube = ConvexBody::unit_cube(n);
  for (auto _ : state) benchmark::DoNotOptimize(xi_bisection(cube, s));
}
BENCHMARK(BM_XiBisection)->Arg(2)->Arg(5)->Arg(10);

void BM_SearchPlaneCube(benchmark::State& state) {
  SearchConfig cfg;
  cfg.n = 2;
  cfg.body = SearchBody::Cube;
  cfg.restarts = static_cast<std::size_t>(state.range(0));
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(minimize_xi(cfg).best_value);
}
BENCHMARK(BM_SearchPlaneCube)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
