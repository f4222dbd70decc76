#include "commands.hpp"

#include "io.hpp"

#include <absorb/absorption.hpp>
#include <absorb/constructions.hpp>
#include <absorb/errors.hpp>
#include <absorb/metrics.hpp>
#include <absorb/oracle.hpp>
#include <absorb/search.hpp>
#include <absorb/sweeps.hpp>

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace absorb::cli {

namespace {

struct GlobalOptions {
  std::string mode = "float";
  bool no_timing = false;
  int indent = 2;

  bool rational() const { return mode == "rational"; }
};

class Reporter {
public:
  Reporter(const GlobalOptions& opts, std::string command)
      : opts_(opts), command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

  void digest(std::string_view data) { digest_input_ += data; }

  json finish(json results, json tolerances, std::optional<std::uint64_t> seed) const {
    json report{{"command", command_},
                {"input_digest", "fnv1a64:" + fnv1a_hex(digest_input_)},
                {"mode", opts_.mode},
                {"results", std::move(results)},
                {"tolerances", std::move(tolerances)},
                {"seed", seed ? json(*seed) : json(nullptr)}};
    if (!opts_.no_timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start_;
      report["wall_time_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    return report;
  }

private:
  const GlobalOptions& opts_;
  std::string command_;
  std::string digest_input_;
  std::chrono::steady_clock::time_point start_;
};

json matrix_to_json(const Matrix<double>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (double x : m.row(r)) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& x : m.row(r)) row.push_back(number_to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Seq>
json numbers_to_json(const Seq& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(number_to_json(v));
  return out;
}

json points_to_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(point_to_json(p));
  return out;
}

template <class T>
json absorption_to_json(const AbsorptionResult<T>& r, bool with_translate) {
  json out{{"value", number_to_json(r.value)},
           {"per_facet", numbers_to_json(r.per_facet)},
           {"argmax_facet", r.argmax_facet},
           {"witness_point", point_to_json(r.witness_point)},
           {"circumscribed", r.circumscribed},
           {"contained", r.contained}};
  if (with_translate) out["witness_translate"] = point_to_json(r.witness_translate);
  return out;
}

// Reads a simplex document from a path.
std::string load(const std::string& path_or_inline, Reporter& rep) {
  std::string text = path_or_inline.starts_with("{") ? path_or_inline : read_file(path_or_inline);
  rep.digest(text);
  return text;
}

json body_doc_from_arg(const std::string& arg, Reporter& rep) {
  if (arg == "unit_ball" || arg == "unit_cube" || arg == "sym_cube") {
    rep.digest(arg);
    return json{{"kind", arg}};
  }
  return parse_json(load(arg, rep));
}

// --- info -----------------------------------------------------------------

json info_float(const Simplex& s) {
  const SimplexMetrics m = compute_metrics(s);
  return {{"dim", s.dim()},
          {"volume", m.volume},
          {"lagrange_coeffs", matrix_to_json(s.coeffs().matrix())},
          {"heights", m.heights},
          {"axial_diameters", m.axial_diameters},
          {"inradius", m.inradius},
          {"incenter", point_to_json(m.incenter)},
          {"tangent_points", points_to_json(m.tangent_points)},
          {"circumradius", m.circumradius},
          {"circumcenter", point_to_json(m.circumcenter)},
          {"facet_measures", m.facet_measures},
          {"surface", m.surface},
          {"euler",
           {{"circumradius", m.euler.circumradius},
            {"n_times_inradius", m.euler.n_times_inradius},
            {"gap", m.euler.gap}}},
          {"regular", m.regular}};
}

json info_rational(const RationalSimplex& s) {
  return {{"dim", s.dim()},
          {"volume", number_to_json(s.volume())},
          {"lagrange_coeffs", matrix_to_json(s.coeffs().matrix())},
          {"centroid", point_to_json(s.centroid())},
          {"axial_diameters", numbers_to_json(axial_diameters(s))},
          {"alpha_unit_cube", number_to_json(alpha_unit_cube_from_coeffs(s))},
          {"alpha_sym_cube", number_to_json(alpha_sym_cube_from_coeffs(s))}};
}

json info_oracles(const Simplex& s, std::size_t resolution) {
  const InscribedBall in = chebyshev_inradius(s);
  std::vector<double> diameters;
  for (std::size_t i = 0; i < s.dim(); ++i)
    diameters.push_back(axial_diameter_bruteforce(s, i, resolution));
  return {{"inradius", in.radius},
          {"incenter", point_to_json(in.center)},
          {"axial_diameters", diameters}};
}

int cmd_info(const GlobalOptions& opts, const std::string& path, bool check,
             std::size_t resolution, std::ostream& out) {
  Reporter rep(opts, "info");
  const json doc = parse_json(load(path, rep));
  json results;
  if (opts.rational()) {
    results = info_rational(simplex_from_json<Rational>(doc));
  } else {
    const Simplex s = simplex_from_json<double>(doc);
    results = info_float(s);
    if (check) results["cross_check"] = info_oracles(s, resolution);
  }
  json tol{{"regularity", kRegularityTolerance}, {"pivot", kPivotEpsilon}};
  if (check) tol["grid_resolution"] = resolution;
  out << rep.finish(std::move(results), std::move(tol), std::nullopt).dump(opts.indent) << '\n';
  return kExitOk;
}

// --- absorb ---------------------------------------------------------------

template <class T>
json absorb_results(const BasicSimplex<T>& s, const BasicConvexBody<T>& body,
                    const std::string& index, bool check) {
  json results{{"dim", s.dim()}};
  if constexpr (is_rational_v<T>)
    results["body"] = {{"kind", body.label()}};
  else
    results["body"] = body_to_json(body);

  if (index == "xi" || index == "both") results["xi"] = absorption_to_json(xi(body, s), false);
  if (index == "alpha" || index == "both")
    results["alpha"] = absorption_to_json(alpha(body, s), true);

  if constexpr (!is_rational_v<T>) {
    json cross;
    if (body.kind() == BodyKind::Ball) {
      cross["xi_ball_closed_form"] = xi_ball_closed_form(s, body.center(), body.radius());
      cross["alpha_ball_from_normals"] = alpha_ball_from_normals(s, body.radius());
    } else if (body.is_unit_cube()) {
      cross["alpha_unit_cube_from_coeffs"] = alpha_unit_cube_from_coeffs(s);
      cross["alpha_unit_cube_from_diameters"] = alpha_unit_cube_from_diameters(s);
    } else if (body.is_sym_cube()) {
      cross["alpha_sym_cube_from_coeffs"] = alpha_sym_cube_from_coeffs(s);
    }
    if (check) cross["xi_bisection"] = xi_bisection(body, s);
    if (!cross.is_null()) results["cross_check"] = std::move(cross);
  }
  return results;
}

int cmd_absorb(const GlobalOptions& opts, const std::string& simplex_path,
               const std::string& body_arg, const std::string& index, bool check,
               std::ostream& out) {
  Reporter rep(opts, "absorb");
  const json sdoc = parse_json(load(simplex_path, rep));
  const json bdoc = body_doc_from_arg(body_arg, rep);
  json results;
  if (opts.rational()) {
    const auto s = simplex_from_json<Rational>(sdoc);
    results = absorb_results(s, body_from_json<Rational>(bdoc, s.dim()), index, false);
  } else {
    const auto s = simplex_from_json<double>(sdoc);
    results = absorb_results(s, body_from_json<double>(bdoc, s.dim()), index, check);
  }
  json tol{{"circumscribed", kCircumscribedTolerance}};
  if (check) tol["bisection_width"] = kBisectionWidth;
  out << rep.finish(std::move(results), std::move(tol), std::nullopt).dump(opts.indent) << '\n';
  return kExitOk;
}

// --- construct ------------------------------------------------------------

int cmd_construct(const GlobalOptions& opts, const std::string& kind, std::size_t n,
                  std::uint64_t seed, const std::string& scheme, std::ostream& out) {
  json doc;
  if (kind == "standard") {
    doc = opts.rational() ? simplex_to_json(standard_simplex<Rational>(n))
                          : simplex_to_json(standard_simplex<double>(n));
  } else if (kind == "hadamard") {
    doc = opts.rational() ? simplex_to_json(hadamard_simplex<Rational>(n))
                          : simplex_to_json(hadamard_simplex<double>(n));
  } else if (kind == "regular_ball") {
    if (opts.rational()) throw ModeUnsupported("regular_ball has irrational coordinates");
    doc = simplex_to_json(regular_inscribed_simplex(n));
  } else if (kind == "random") {
    const Simplex s = random_simplex(n, seed, parse_random_scheme(scheme));
    doc = opts.rational() ? simplex_to_json(to_rational(s)) : simplex_to_json(s);
  } else {
    throw Error("unknown construction kind: " + kind);
  }
  out << doc.dump(opts.indent) << '\n';
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const GlobalOptions& opts, const std::string& suite, const SweepConfig& cfg,
               std::ostream& out) {
  if (opts.rational()) throw ModeUnsupported("verify sweeps run in float mode");
  Reporter rep(opts, "verify");
  rep.digest(suite + "/" + std::to_string(cfg.n) + "/" + std::to_string(cfg.cases));
  const std::vector<SuiteResult> results = run_suites(suite, cfg);

  bool all_passed = true;
  json suites = json::array();
  json tolerances = json::object();
  for (const auto& r : results) {
    json entry{{"name", r.name},
               {"cases", r.cases},
               {"worst_deviation", r.worst_deviation},
               {"tolerance", r.tolerance},
               {"passed", r.passed}};
    if (r.failing_index) {
      entry["failing_index"] = *r.failing_index;
      entry["failing_case_seed"] = case_seed(cfg.seed, *r.failing_index);
      entry["failing_simplex"] = simplex_to_json(*r.failing_simplex);
    }
    tolerances[r.name] = r.tolerance;
    all_passed = all_passed && r.passed;
    suites.push_back(std::move(entry));
  }
  json body{{"n", cfg.n}, {"passed", all_passed}, {"suites", std::move(suites)}};
  out << rep.finish(std::move(body), std::move(tolerances), cfg.seed).dump(opts.indent) << '\n';
  return all_passed ? kExitOk : kExitVerificationFailed;
}

// --- search ---------------------------------------------------------------

int cmd_search(const GlobalOptions& opts, const SearchConfig& cfg,
               const std::string& history_path, std::ostream& out) {
  if (opts.rational()) throw ModeUnsupported("search runs in float mode");
  Reporter rep(opts, "search");
  rep.digest(to_string(cfg.body) + "/" + std::to_string(cfg.n) + "/" +
             std::to_string(cfg.restarts) + "/" + std::to_string(cfg.max_iters));
  const SearchResult result = minimize_xi(cfg);

  if (!history_path.empty()) {
    std::ofstream csv(history_path);
    if (!csv) throw Error("cannot write " + history_path);
    csv << history_csv(result);
  }
  const Ball outer = circumball(result.best_simplex);
  json body{{"n", cfg.n},
            {"body", to_string(cfg.body)},
            {"restarts", cfg.restarts},
            {"best_value", result.best_value},
            {"best_restart", result.best_restart},
            {"best_simplex", simplex_to_json(result.best_simplex)},
            {"best_regular", is_regular(result.best_simplex, 1e-2)},
            {"best_circumradius", outer.radius},
            {"restart_best", result.restart_best},
            {"iterations", result.iterations}};
  json tol{{"bound_slack", 1e-9}, {"min_improvement", 1e-12}, {"min_step", cfg.min_step}};
  out << rep.finish(std::move(body), std::move(tol), cfg.seed).dump(opts.indent) << '\n';
  return kExitOk;
}

// --- sandwich ------------------------------------------------------------

int cmd_sandwich(const GlobalOptions& opts, const std::string& path, std::ostream& out) {
  if (opts.rational()) throw ModeUnsupported("sandwich runs in float mode");
  Reporter rep(opts, "sandwich");
  const Simplex s = simplex_from_json<double>(parse_json(load(path, rep)));
  const CubeSandwichReport r = cube_sandwich_check(s);
  json body{{"dim", s.dim()},
            {"simplex_in_cube", r.simplex_in_cube},
            {"cube_in_dilate", r.cube_in_dilate},
            {"regular", r.regular},
            {"ball_in_dilate", r.ball_in_dilate},
            {"ball_margin", r.ball_margin},
            {"implication_holds", r.implication_holds}};
  json tol{{"containment", kContainmentTolerance}, {"regularity", kRegularityTolerance}};
  out << rep.finish(std::move(body), std::move(tol), std::nullopt).dump(opts.indent) << '\n';
  return r.implication_holds ? kExitOk : kExitVerificationFailed;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const DegenerateSimplex*>(&e)) return kExitDegenerate;
  if (dynamic_cast<const DimensionMismatch*>(&e)) return kExitDimension;
  if (dynamic_cast<const DimensionTooLarge*>(&e)) return kExitDimension;
  if (dynamic_cast<const UnsupportedOrder*>(&e)) return kExitUnsupportedOrder;
  if (dynamic_cast<const BoundViolation*>(&e)) return kExitVerificationFailed;
  return kExitParseOrConfig;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  GlobalOptions opts;
  CLI::App app{"Absorption and translate indices of simplices with respect to convex bodies",
               "absorb"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--mode", opts.mode, "Scalar mode")
      ->check(CLI::IsMember({"float", "rational"}));
  app.add_flag("--no-timing", opts.no_timing, "Omit wall time so reports diff cleanly");
  app.add_option("--indent", opts.indent, "JSON indentation (-1 for compact)");

  std::function<int()> action;

  std::string simplex_path;
  auto* info = app.add_subcommand("info", "Metrics of a simplex");
  bool info_check = false;
  std::size_t resolution = kDefaultGridResolution;
  info->add_option("simplex", simplex_path, "Simplex JSON file")->required();
  info->add_flag("--check", info_check, "Also run the inradius and axial diameter oracles");
  info->add_option("--resolution", resolution, "Grid resolution for the diameter oracle")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  info->callback([&] {
    action = [&] { return cmd_info(opts, simplex_path, info_check, resolution, out); };
  });

  std::string body_arg;
  std::string index = "both";
  bool check = false;
  auto* absorb = app.add_subcommand("absorb", "xi and alpha of a simplex for a body");
  absorb->add_option("simplex", simplex_path, "Simplex JSON file")->required();
  absorb->add_option("body", body_arg,
                     "Body JSON file, inline JSON, or unit_ball|unit_cube|sym_cube")
      ->required();
  absorb->add_option("--index", index, "Which index to report")
      ->check(CLI::IsMember({"xi", "alpha", "both"}));
  absorb->add_flag("--check", check, "Also run the bisection oracle for xi");
  absorb->callback([&] {
    action = [&] { return cmd_absorb(opts, simplex_path, body_arg, index, check, out); };
  });

  std::string kind;
  std::size_t n = 2;
  std::uint64_t seed = 1;
  std::string scheme = "gaussian";
  auto* construct = app.add_subcommand("construct", "Emit a simplex as JSON");
  construct->add_option("kind", kind, "standard|regular_ball|hadamard|random")
      ->required()
      ->check(CLI::IsMember({"standard", "regular_ball", "hadamard", "random"}));
  construct->add_option("n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  construct->add_option("--seed", seed, "Seed for random");
  construct->add_option("--scheme", scheme, "Random scheme")
      ->check(CLI::IsMember({"gaussian", "in_ball", "unit_cube_vertices"}));
  construct->callback(
      [&] { action = [&] { return cmd_construct(opts, kind, n, seed, scheme, out); }; });

  std::string suite = "all";
  SweepConfig sweep;
  double tol = 0.0;
  auto* verify = app.add_subcommand("verify", "Randomized cross-validation sweeps");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_choices));
  verify->add_option("--n", sweep.n, "Dimension")->check(CLI::Range(1, 12));
  verify->add_option("--cases", sweep.cases, "Cases per suite");
  verify->add_option("--seed", sweep.seed, "Sweep seed");
  auto* tol_opt = verify->add_option("--tol", tol, "Override every suite tolerance");
  verify->callback([&] {
    if (tol_opt->count() > 0) sweep.tol = tol;
    action = [&] { return cmd_verify(opts, suite, sweep, out); };
  });

  SearchConfig search_cfg;
  std::string body_name = "cube";
  std::string history_path;
  auto* search = app.add_subcommand("search", "Multistart search for small xi");
  search->add_option("--n", search_cfg.n, "Dimension")
      ->check(CLI::Range(std::size_t{1}, kMaxSearchDim));
  search->add_option("--body", body_name, "ball|cube")->check(CLI::IsMember({"ball", "cube"}));
  search->add_option("--restarts", search_cfg.restarts, "Independent restarts");
  search->add_option("--max-iters", search_cfg.max_iters, "Evaluations per restart");
  search->add_option("--seed", search_cfg.seed, "Search seed");
  search->add_option("--threads", search_cfg.threads, "Worker threads (0 = all cores)");
  search->add_option("--history", history_path, "Write restart,iteration,value CSV here");
  search->callback([&] {
    search_cfg.body = parse_search_body(body_name);
    action = [&] { return cmd_search(opts, search_cfg, history_path, out); };
  });

  auto* sandwich = app.add_subcommand(
      "sandwich", "Check a simplex with S in Q_n in nS against the circumscribed cube ball");
  sandwich->add_option("simplex", simplex_path, "Simplex JSON file")->required();
  sandwich->callback([&] { action = [&] { return cmd_sandwich(opts, simplex_path, out); }; });

  std::vector<std::string> argv_storage{"absorb"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseOrConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace absorb::cli
