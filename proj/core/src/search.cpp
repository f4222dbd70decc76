#include <absorb/search.hpp>

#include <absorb/absorption.hpp>
#include <absorb/bodies.hpp>
#include <absorb/constructions.hpp>
#include <absorb/metrics.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

namespace absorb {

SearchBody parse_search_body(std::string_view name) {
  if (name == "ball") return SearchBody::Ball;
  if (name == "cube") return SearchBody::Cube;
  throw Error("unknown search body: " + std::string(name));
}

std::string to_string(SearchBody body) {
  return body == SearchBody::Ball ? "ball" : "cube";
}

void SearchConfig::validate() const {
  if (n < 1 || n > kMaxSearchDim)
    throw Error("search dimension must be in [1, " + std::to_string(kMaxSearchDim) + "]");
  if (restarts < 1) throw Error("restarts must be >= 1");
  if (max_iters < 1) throw Error("max_iters must be >= 1");
  if (!(initial_step > 0.0) || !(min_step > 0.0)) throw Error("steps must be positive");
  if (!(decay > 0.0 && decay < 1.0)) throw Error("decay must be in (0, 1)");
}

namespace {

constexpr double kBoundSlack = 1e-9;
constexpr double kMinImprovement = 1e-12;

std::uint64_t restart_seed(std::uint64_t seed, std::size_t restart) {
  // splitmix64 step so neighbouring restarts get unrelated streams
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (restart + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Maps a trial vertex set into the feasible region. Returns nullopt when the
// result is degenerate.
std::optional<Simplex> project(std::vector<Point> verts, SearchBody body) {
  try {
    if (body == SearchBody::Cube) {
      for (auto& v : verts)
        for (auto& x : v) x = std::clamp(x, 0.0, 1.0);
      return Simplex(std::move(verts));
    }
    Simplex s(std::move(verts));
    const Ball b = circumball(s);
    const double scale = b.radius > 1.0 ? b.radius : 1.0;
    std::vector<Point> moved = s.vertices();
    for (auto& v : moved)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] - b.center[i]) / scale;
    return Simplex(std::move(moved));
  } catch (const DegenerateSimplex&) {
    return std::nullopt;
  }
}

struct RestartOutcome {
  double best = 0.0;
  std::vector<Point> vertices;
  std::vector<SearchTrace> trace;
  std::size_t iterations = 0;
};

RestartOutcome run_restart(const SearchConfig& cfg, std::size_t restart) {
  const ConvexBody body = cfg.body == SearchBody::Cube ? ConvexBody::unit_cube(cfg.n)
                                                        : ConvexBody::unit_ball(cfg.n);
  const double bound = static_cast<double>(cfg.n) - kBoundSlack;
  auto objective = [&](const Simplex& s) {
    const double v = xi(body, s).value;
    if (v < bound)
      throw BoundViolation("xi = " + std::to_string(v) + " below the lower bound n = " +
                           std::to_string(cfg.n));
    return v;
  };

  const RandomScheme scheme =
      cfg.body == SearchBody::Cube ? RandomScheme::UnitCubeVertices : RandomScheme::InBall;
  std::optional<Simplex> start = project(
      random_simplex(cfg.n, restart_seed(cfg.seed, restart), scheme).vertices(), cfg.body);
  if (!start) throw GenerationFailed("initial simplex degenerate after projection");

  RestartOutcome out;
  Simplex current = *start;
  out.best = objective(current);
  out.trace.push_back({restart, 0, out.best});

  double step = cfg.initial_step;
  while (step >= cfg.min_step && out.iterations < cfg.max_iters) {
    bool improved = false;
    for (std::size_t k = 0; k <= cfg.n && out.iterations < cfg.max_iters; ++k)
      for (std::size_t i = 0; i < cfg.n && out.iterations < cfg.max_iters; ++i)
        for (double sign : {1.0, -1.0}) {
          if (out.iterations >= cfg.max_iters) break;
          std::vector<Point> verts = current.vertices();
          verts[k][i] += sign * step;
          std::optional<Simplex> trial = project(std::move(verts), cfg.body);
          ++out.iterations;
          if (!trial) continue;
          const double v = objective(*trial);
          if (v < out.best - kMinImprovement) {
            out.best = v;
            current = std::move(*trial);
            improved = true;
            out.trace.push_back({restart, out.iterations, v});
          }
        }
    if (!improved) step *= cfg.decay;
  }
  out.vertices = current.vertices();
  return out;
}

}  // namespace

SearchResult minimize_xi(const SearchConfig& config) {
  config.validate();
  std::vector<std::optional<RestartOutcome>> outcomes(config.restarts);

  std::size_t workers = config.threads;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, config.restarts);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t r = next++; r < config.restarts; r = next++) {
      try {
        outcomes[r] = run_restart(config, r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = config.restarts;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  // Merge in restart order so the result does not depend on scheduling.
  std::size_t best_restart = 0;
  for (std::size_t r = 1; r < config.restarts; ++r)
    if (outcomes[r]->best < outcomes[best_restart]->best) best_restart = r;

  SearchResult result{outcomes[best_restart]->best,
                      Simplex(outcomes[best_restart]->vertices),
                      best_restart,
                      {},
                      {},
                      0};
  for (auto& o : outcomes) {
    result.restart_best.push_back(o->best);
    result.iterations += o->iterations;
    result.history.insert(result.history.end(), o->trace.begin(), o->trace.end());
  }
  return result;
}

}  // namespace absorb
