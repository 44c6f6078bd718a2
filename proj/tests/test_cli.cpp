#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cliffstring/json_io.hpp"

namespace cliffstring {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cliffstring_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, OctonionCheckPasses) {
  const Result r = run_cli({"octonion-check", "--seed", "7", "--trials", "2000"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["checks"]["norm_composition"]["trials"], 2000);
  EXPECT_EQ(j["checks"]["non_associativity"]["bound"], "lower");
}

TEST_F(CliTest, FailingToleranceGivesCheckFailure) {
  const Result r = run_cli({"octonion-check", "--trials", "100", "--tol.alternativity", "1e-300"});
  EXPECT_EQ(r.code, cli::kExitCheckFailure);
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_FALSE(j["checks"]["alternativity"]["pass"].get<bool>());
  EXPECT_TRUE(j["checks"]["conjugation"]["pass"].get<bool>());
}

TEST_F(CliTest, ResolveIdentityFile) {
  std::ofstream(path("identity2.json")) << R"({"entries": [[[1,0,0,0,0,0,0,0], [0,0,0,0,0,0,0,0]],
                                                            [[0,0,0,0,0,0,0,0], [1,0,0,0,0,0,0,0]]]})";
  const Result r = run_cli({"resolve", "--input", path("identity2.json"), "--tol", "1e-12", "--output", path("res.json")});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  EXPECT_TRUE(r.out.empty());
  const Json j = read_json_file(path("res.json"));
  EXPECT_EQ(j["max_residual"], 0.0);
  EXPECT_EQ(j["vectors"].size(), 2u);
  EXPECT_EQ(j["a"][1][1][0], 1.0);
}

TEST_F(CliTest, ResolveBatch) {
  const Result r = run_cli({"resolve", "--seed", "3", "--trials", "50", "--spacetime-trials", "100"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_GE(j["checks"]["degenerate_pivots"]["max_residual"].get<double>(), 1.0);
}

TEST_F(CliTest, Redshift) {
  const Result r = run_cli({"redshift", "--t-emit", "1", "--t-obsv", "4"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  EXPECT_EQ(Json::parse(r.out)["z"], 1.0);
  EXPECT_EQ(run_cli({"redshift", "--t-emit", "0", "--t-obsv", "4"}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"redshift", "--t-emit", "1"}).code, cli::kExitInputError);
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"no-such-command"}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"octonion-check", "--trials", "0"}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"octonion-check", "--tol.norm", "-1"}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"resolve", "--input", path("missing.json")}).code, cli::kExitInputError);
  std::ofstream(path("bad.json")) << "{";
  EXPECT_EQ(run_cli({"resolve", "--input", path("bad.json")}).code, cli::kExitInputError);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kExitPass);
}

TEST_F(CliTest, SeedFromEnvironment) {
  setenv("CLIFFSTRING_SEED", "42", 1);
  const Result env = run_cli({"octonion-check", "--trials", "100"});
  unsetenv("CLIFFSTRING_SEED");
  const Result flag = run_cli({"octonion-check", "--trials", "100", "--seed", "42"});
  EXPECT_EQ(Json::parse(env.out)["seed"], 42);
  EXPECT_EQ(env.out, flag.out);

  setenv("CLIFFSTRING_SEED", "forty-two", 1);
  EXPECT_EQ(run_cli({"octonion-check", "--trials", "10"}).code, cli::kExitInputError);
  unsetenv("CLIFFSTRING_SEED");
}

TEST_F(CliTest, GenFixtures) {
  for (const std::string kind : {"hermitian", "spectrum", "spinor"}) {
    const Result a = run_cli({"gen-fixture", "--kind", kind, "--seed", "1"});
    const Result b = run_cli({"gen-fixture", "--kind", kind, "--seed", "1"});
    ASSERT_EQ(a.code, cli::kExitPass) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  const Json spectrum = Json::parse(run_cli({"gen-fixture", "--kind", "spectrum", "--seed", "9"}).out);
  EXPECT_NO_THROW(enforce_boundary(spectrum_from_json(spectrum)));
  const OctSpinor s = spinor_from_json(Json::parse(run_cli({"gen-fixture", "--kind", "spinor", "--seed", "9"}).out));
  EXPECT_TRUE(std::isfinite(norm(s[0])) && std::isfinite(norm(s[1])));
  EXPECT_EQ(run_cli({"gen-fixture", "--kind", "matrix"}).code, cli::kExitInputError);
}

TEST_F(CliTest, StringModesFromFileWithCsv) {
  ASSERT_EQ(run_cli({"gen-fixture", "--kind", "spectrum", "--seed", "2", "--modes", "2", "--output", path("s.json")}).code, 0);
  const Result r = run_cli({"string-modes", "--spectrum", path("s.json"), "--grid", "64", "--csv", path("x.csv"),
                            "--csv-grid", "4", "--report", path("out.json")});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const Json j = read_json_file(path("out.json"));
  EXPECT_EQ(j["grid"]["n_tau"], 64);
  EXPECT_EQ(j["momentum"].size(), 4u);
  std::ifstream csv(path("x.csv"));
  int lines = 0;
  for (std::string line; std::getline(csv, line);) ++lines;
  EXPECT_EQ(lines, 1 + 4 * 5);
}

TEST_F(CliTest, StringModesRejectsBoundaryViolation) {
  std::ofstream(path("bad.json")) << R"({"K": {"re": [[1,0],[0,1]]}, "C0": {"re": [[0,0],[0,0]]}, "ell": 1, "m": 1,
    "modes": [{"n": 1, "AL": {"re": [[1,0],[0,0]]}, "AR": {"re": [[-1,0],[0,0]]}, "Anm": {"re": [[0,0],[0,0]]}},
              {"n": -1, "A": {"re": [[1,0],[0,0]]}, "Anm": {"re": [[0,0],[0,0]]}}]})";
  EXPECT_EQ(run_cli({"string-modes", "--spectrum", path("bad.json"), "--grid", "16"}).code, cli::kExitInputError);
}

TEST_F(CliTest, QuantumCheckSmallDegree) {
  const Result r = run_cli({"quantum-check", "--degree", "4", "--hbar", "1.0", "--jz-degree", "2"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["jz_spectrum"].size(), 6u);
  EXPECT_TRUE(j["checks"]["lorentz_closure"]["pass"].get<bool>());
}

TEST_F(CliTest, LorentzCheckKeys) {
  const Result r = run_cli({"lorentz-check", "--seed", "2", "--trials", "100", "--nest-depth", "3"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const Json j = Json::parse(r.out);
  for (const char* key : {"max_det_residual", "max_compat_residual", "max_contraction_residual"}) {
    EXPECT_LE(j[key].get<double>(), 1e-10) << key;
  }
  EXPECT_EQ(j["nest_depth"], 3);
}

TEST_F(CliTest, OverallPassIsConjunction) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"octonion-check", "--trials", "50"},
           {"octonion-check", "--trials", "50", "--tol.norm", "1e-300"},
           {"lorentz-check", "--trials", "20", "--tol.control", "1e6"}}) {
    const Json j = Json::parse(run_cli(args).out);
    bool all = true;
    for (const auto& [name, c] : j["checks"].items()) all = all && c["pass"].get<bool>();
    EXPECT_EQ(j["pass"].get<bool>(), all);
  }
}

}  // namespace
}  // namespace cliffstring
