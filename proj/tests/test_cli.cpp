#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gztoda/cli/eval.hpp"
#include "gztoda/cli/suites.hpp"
#include "gztoda/error.hpp"

using namespace gztoda;
using namespace gztoda::cli;

namespace {

std::string g_binary;

int run(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Registry, ThirteenSuites) {
  EXPECT_EQ(suites().size(), 13u);
  const std::string text = list_suites();
  EXPECT_NE(text.find("casimir → cas1/cas2"), std::string::npos);
  EXPECT_NE(text.find("bimodule → wnc1/dg2/commt"), std::string::npos);
  EXPECT_EQ(find_suite("nope"), nullptr);
}

TEST(Config, UnknownSuiteRejected) {
  EXPECT_THROW(parse_suite_config({{"suites", {"casimir", "bogus"}}}), Error);
  EXPECT_THROW(parse_suite_config({{"colour", 1}}), Error);
  EXPECT_THROW(parse_suite_config({{"mode", "sometimes"}}), Error);
  EXPECT_THROW(parse_suite_config({{"numeric", {{"gamma2", {1.0}}}}}), Error);
}

TEST(Config, HashIgnoresJobs) {
  SuiteConfig a = parse_suite_config({{"suites", {"casimir"}}, {"jobs", 1}});
  SuiteConfig b = parse_suite_config({{"suites", {"casimir"}}, {"jobs", 4}});
  EXPECT_EQ(config_hash(to_json(a)), config_hash(to_json(b)));
  SuiteConfig c = parse_suite_config({{"suites", {"casimir"}}, {"seed", 9}});
  EXPECT_NE(config_hash(to_json(a)), config_hash(to_json(c)));
}

TEST(Verify, CasimirDeterministic) {
  SuiteConfig cfg = parse_suite_config({{"suites", {"casimir", "pairing"}}, {"mode", "both"}, {"seed", 7}});
  const Report a = run_verify(cfg), b = run_verify(cfg);
  EXPECT_TRUE(a.all_pass());
  EXPECT_EQ(report_document(a, cfg, false).dump(), report_document(b, cfg, false).dump());
  const auto doc = report_document(a, cfg);
  EXPECT_EQ(doc["environment"]["seed"], 7);
  EXPECT_EQ(doc["environment"]["version"], kVersion);
}

TEST(Eval, PlaneWaveRows) {
  EvalConfig cfg = parse_eval_config({{"N", 1}, {"gamma", {0.5}}, {"points", 3}, {"lo", -1}, {"hi", 1}});
  const std::string csv = eval_csv(cfg, 1);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# config_hash=", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line, "x1,re,im,err");
  std::getline(in, line);
  double x, re, im;
  ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &re, &im), 3);
  EXPECT_DOUBLE_EQ(x, -1);
  EXPECT_NEAR(re, std::cos(-0.5), 1e-15);
  EXPECT_NEAR(im, std::sin(-0.5), 1e-15);
}

TEST(Eval, DefaultGridDeterministicAndAccurate) {
  EvalConfig cfg = parse_eval_config(nlohmann::json::object());
  const std::string a = eval_csv(cfg, 1), b = eval_csv(cfg, 2);
  EXPECT_EQ(a, b);
  std::istringstream in(a);
  std::string line;
  int rows = 0;
  double worst = 0;
  std::getline(in, line);
  std::getline(in, line);
  while (std::getline(in, line)) {
    double x1, x2, re, im, err;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &x1, &x2, &re, &im, &err), 5);
    worst = std::max(worst, err);
    ++rows;
  }
  EXPECT_EQ(rows, 41 * 41);
  EXPECT_LE(worst, 1e-6);
}

TEST(Binary, ExitCodes) {
  if (g_binary.empty()) GTEST_SKIP() << "binary path not given";
  EXPECT_EQ(run("list"), 0);
  EXPECT_EQ(run("verify --suite casimir --n-max 3"), 0);
  EXPECT_EQ(run("verify --suite bogus"), 2);
  EXPECT_EQ(run("verify --mode sometimes --suite casimir"), 2);
  EXPECT_EQ(run("verify --config /nonexistent.json"), 2);
  EXPECT_EQ(run("eval --n 2 --T 2"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
}

TEST(Binary, FlagsOverrideConfig) {
  if (g_binary.empty()) GTEST_SKIP() << "binary path not given";
  const std::string cfg = ::testing::TempDir() + "gztoda_cfg.json";
  const std::string out = ::testing::TempDir() + "gztoda_out.json";
  std::ofstream(cfg) << R"({"suites": ["casimir"], "seed": 3, "mode": "randomized"})";
  ASSERT_EQ(run("verify --config " + cfg + " --seed 11 --no-timings --out " + out), 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(doc["environment"]["seed"], 11);
  EXPECT_EQ(doc["environment"]["mode"], "randomized");
  EXPECT_EQ(doc["checks"][0]["suite"], "casimir");
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  if (argc > 1) g_binary = argv[1];
  return RUN_ALL_TESTS();
}
