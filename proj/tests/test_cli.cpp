#include "commands.hpp"
#include "io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace absorb::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("absorb_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string standard2() {
    return write("std2.json", R"({"dim": 2, "vertices": [[0, 0], [1, 0], [0, 1]]})");
  }

  fs::path dir_;
};

TEST_F(CliTest, InfoStandardTriangle) {
  const CliRun r = run_cli({"--no-timing", "info", standard2()});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rep = r.report();
  EXPECT_EQ(rep["command"], "info");
  EXPECT_EQ(rep["mode"], "float");
  EXPECT_FALSE(rep.contains("wall_time_ms"));
  EXPECT_NEAR(rep["results"]["inradius"].get<double>(), 0.292893, 1e-6);
  EXPECT_NEAR(rep["results"]["circumradius"].get<double>(), std::sqrt(0.5), 1e-12);
  EXPECT_FALSE(rep["results"]["regular"].get<bool>());
  EXPECT_EQ(rep["results"]["tangent_points"].size(), 3u);
}

TEST_F(CliTest, InfoOracleCrossCheck) {
  const CliRun r = run_cli({"--no-timing", "info", standard2(), "--check", "--resolution", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json rep = r.report();
  EXPECT_NEAR(rep["results"]["cross_check"]["inradius"].get<double>(),
              rep["results"]["inradius"].get<double>(), 1e-10);
  EXPECT_NEAR(rep["results"]["cross_check"]["axial_diameters"][0].get<double>(), 1.0, 1e-6);
  EXPECT_EQ(rep["tolerances"]["grid_resolution"], 20);
}

TEST_F(CliTest, InfoRegularTetrahedronEulerGap) {
  const CliRun built = run_cli({"construct", "regular_ball", "4"});
  ASSERT_EQ(built.code, 0);
  const CliRun r = run_cli({"--no-timing", "info", write("reg4.json", built.out)});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LT(std::abs(r.report()["results"]["euler"]["gap"].get<double>()), 1e-9);
  EXPECT_TRUE(r.report()["results"]["regular"].get<bool>());
}

TEST_F(CliTest, InfoRationalIsExact) {
  const CliRun r = run_cli({"--mode", "rational", "--no-timing", "info", standard2()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.report()["results"]["volume"], "1/2");
  EXPECT_EQ(r.report()["results"]["alpha_unit_cube"], 2);
}

TEST_F(CliTest, DegenerateExitsThree) {
  const CliRun r = run_cli({"info", write("deg.json", R"({"vertices": [[0,0],[1,1],[2,2]]})")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST_F(CliTest, ParseErrorsExitTwo) {
  EXPECT_EQ(run_cli({"info", write("bad.json", "{not json")}).code, 2);
  EXPECT_EQ(run_cli({"info", write("short.json", R"({"vertices": [[0,0],[1,0],[0]]})")}).code, 2);
  EXPECT_EQ(run_cli({"info", (dir_ / "missing.json").string()}).code, 2);
  EXPECT_EQ(run_cli({"absorb", standard2(), "unit_ball", "--index", "beta"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
}

TEST_F(CliTest, AbsorbBallOnStandardTriangle) {
  const CliRun r = run_cli({"--no-timing", "absorb", standard2(), "unit_ball", "--check"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json res = r.report()["results"];
  EXPECT_NEAR(res["xi"]["value"].get<double>(), 4.0, 1e-12);
  EXPECT_NEAR(res["alpha"]["value"].get<double>(), 2.0 + std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(res["cross_check"]["xi_bisection"].get<double>(), 4.0, 1e-6);
  EXPECT_EQ(res["xi"]["per_facet"].size(), 3u);
  EXPECT_FALSE(res["xi"]["circumscribed"].get<bool>());
}

TEST_F(CliTest, AbsorbOffsetBallMatchesClosedFormAndOracle) {
  const CliRun r = run_cli({"--no-timing", "absorb", standard2(),
                         R"({"kind": "ball", "center": [1, 0], "radius": 2})", "--index", "xi",
                         "--check"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json res = r.report()["results"];
  const double v = res["xi"]["value"].get<double>();
  EXPECT_NEAR(res["cross_check"]["xi_ball_closed_form"].get<double>(), v, 1e-6);
  EXPECT_NEAR(res["cross_check"]["xi_bisection"].get<double>(), v, 1e-6);
  EXPECT_FALSE(res.contains("alpha"));
}

TEST_F(CliTest, AbsorbRegularAndHadamard) {
  const CliRun reg = run_cli({"construct", "regular_ball", "3"});
  const CliRun r = run_cli({"--no-timing", "absorb", write("reg.json", reg.out), "unit_ball"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(r.report()["results"]["xi"]["value"].get<double>(), 3.0, 1e-9);
  EXPECT_NEAR(r.report()["results"]["alpha"]["value"].get<double>(), 3.0, 1e-9);
  EXPECT_TRUE(r.report()["results"]["xi"]["circumscribed"].get<bool>());

  const CliRun had = run_cli({"--mode", "rational", "construct", "hadamard", "3"});
  const CliRun q = run_cli(
      {"--mode", "rational", "--no-timing", "absorb", write("had.json", had.out), "unit_cube"});
  ASSERT_EQ(q.code, 0) << q.err;
  EXPECT_EQ(q.report()["results"]["xi"]["value"], 3);
}

TEST_F(CliTest, AbsorbDimensionMismatchExitsFour) {
  EXPECT_EQ(run_cli({"absorb", standard2(), R"({"kind": "unit_cube", "dim": 3})"}).code, 4);
  EXPECT_EQ(run_cli({"absorb", standard2(), R"({"kind": "ball", "center": [0,0,0], "radius": 1})"})
                .code,
            4);
}

TEST_F(CliTest, RationalBallIsRejected) {
  EXPECT_EQ(run_cli({"--mode", "rational", "absorb", standard2(), "unit_ball"}).code, 2);
}

TEST_F(CliTest, ConstructKinds) {
  const CliRun reg = run_cli({"construct", "regular_ball", "2"});
  ASSERT_EQ(reg.code, 0);
  const json doc = json::parse(reg.out);
  ASSERT_EQ(doc["vertices"].size(), 3u);
  for (const auto& v : doc["vertices"])
    EXPECT_NEAR(std::hypot(v[0].get<double>(), v[1].get<double>()), 1.0, 1e-12);

  EXPECT_EQ(run_cli({"construct", "hadamard", "4"}).code, 5);
  EXPECT_EQ(run_cli({"construct", "random", "3", "--seed", "7"}).out,
            run_cli({"construct", "random", "3", "--seed", "7"}).out);
  EXPECT_NE(run_cli({"construct", "random", "3", "--seed", "7"}).out,
            run_cli({"construct", "random", "3", "--seed", "8"}).out);
  EXPECT_EQ(run_cli({"construct", "pyramid", "3"}).code, 2);
  EXPECT_EQ(run_cli({"--mode", "rational", "construct", "standard", "2"}).code, 0);
}

TEST_F(CliTest, VerifyAllPasses) {
  const CliRun r = run_cli({"--no-timing", "verify", "--suite", "all", "--n", "3", "--cases", "200"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json rep = r.report();
  EXPECT_TRUE(rep["results"]["passed"].get<bool>());
  EXPECT_EQ(rep["results"]["suites"].size(), 5u);
  for (const auto& s : rep["results"]["suites"])
    EXPECT_LE(s["worst_deviation"].get<double>(), s["tolerance"].get<double>());
}

TEST_F(CliTest, VerifyFailureSerializesCase) {
  const CliRun r = run_cli({"--no-timing", "verify", "--suite", "alpha_ball", "--n", "2", "--cases",
                         "5", "--tol", "-1"});
  EXPECT_EQ(r.code, 1);
  const json suite = r.report()["results"]["suites"][0];
  EXPECT_FALSE(suite["passed"].get<bool>());
  EXPECT_EQ(suite["failing_index"], 0);
  EXPECT_EQ(suite["failing_simplex"]["vertices"].size(), 3u);
  // The serialized simplex replays through the regular entry point.
  const CliRun replay = run_cli({"info", write("fail.json", suite["failing_simplex"].dump())});
  EXPECT_EQ(replay.code, 0);
}

TEST_F(CliTest, SearchWritesHistory) {
  const std::string csv = (dir_ / "hist.csv").string();
  const CliRun r = run_cli({"--no-timing", "search", "--n", "2", "--body", "ball", "--restarts", "5",
                         "--seed", "3", "--history", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.report()["results"]["best_value"].get<double>(), 2.0, 1e-3);
  EXPECT_EQ(r.report()["seed"], 3);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "restart,iteration,value");
  EXPECT_EQ(run_cli({"search", "--n", "9"}).code, 2);
}

TEST_F(CliTest, Sandwich) {
  const CliRun had = run_cli({"construct", "hadamard", "3"});
  const CliRun r = run_cli({"--no-timing", "sandwich", write("had.json", had.out)});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.report()["results"]["ball_in_dilate"].get<bool>());
  EXPECT_EQ(run_cli({"sandwich", standard2()}).code, 2);
}

TEST_F(CliTest, ReportsAreDeterministic) {
  const std::vector<std::string> args{"--no-timing", "absorb", standard2(), "sym_cube"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Io, ScalarsAcceptFractionsAndDecimals) {
  const json doc = json::parse(R"({"vertices": [[0, "1/2"], ["0.1", 0], [1, 1]]})");
  const auto exact = simplex_from_json<Rational>(doc);
  EXPECT_EQ(exact.vertex(0)[1], Rational(1, 2));
  EXPECT_EQ(exact.vertex(1)[0], Rational(1, 10));
  EXPECT_DOUBLE_EQ(simplex_from_json<double>(doc).vertex(1)[0], 0.1);
  EXPECT_THROW(simplex_from_json<double>(json::parse(R"({"vertices": [[0, "x"], [1, 0], [0, 1]]})")),
               ParseError);
  EXPECT_THROW(simplex_from_json<double>(json::parse(R"({"dim": 3, "vertices": [[0,0],[1,0],[0,1]]})")),
               ParseError);
}

TEST(Io, NumbersRenderExactly) {
  EXPECT_EQ(number_to_json(Rational(3)), 3);
  EXPECT_EQ(number_to_json(Rational(-2, 6)), "-1/3");
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
}

}  // namespace
}  // namespace absorb::cli
