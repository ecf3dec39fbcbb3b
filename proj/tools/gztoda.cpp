#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gztoda/cli/eval.hpp"
#include "gztoda/cli/suites.hpp"
#include "gztoda/error.hpp"

using namespace gztoda;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInternal = 3;

int default_jobs() {
  if (const char* env = std::getenv("GZTODA_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return j;
    } catch (...) {
    }
    throw Error(ErrorCode::Config, "GZTODA_JOBS must be a positive integer");
  }
  return 1;
}

nlohmann::json load_config(const std::string& path) {
  if (path.empty()) return nlohmann::json::object();
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Config, "cannot read config " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Config, std::string("config is not valid JSON: ") + e.what());
  }
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Config, "cannot write " + path);
  out << text;
}

void print_summary(const Report& r, const cli::SuiteConfig& cfg) {
  std::map<std::string, std::array<std::size_t, 3>> per;
  std::map<std::string, double> ms;
  std::vector<std::string> order;
  for (const auto& c : r.checks()) {
    if (!per.count(c.suite)) order.push_back(c.suite);
    auto& p = per[c.suite];
    p[static_cast<int>(c.status)]++;
    ms[c.suite] += c.wall_ms;
  }
  std::cout << "gztoda " << cli::kVersion << "  mode=" << to_string(cfg.mode) << " seed=" << cfg.seed
            << " config_hash=" << cli::config_hash(cli::to_json(cfg)) << "\n";
  for (const auto& s : order) {
    const auto& p = per[s];
    std::cout << "  " << s << ": " << p[0] << " pass, " << p[1] << " fail, " << p[2] << " skipped\n";
  }
  for (const auto& c : r.checks()) {
    if (c.status != Status::Fail) continue;
    std::cout << "  FAIL [" << c.suite << " " << c.anchor << "] " << c.name;
    if (!c.witness.empty()) std::cout << "  witness: " << c.witness;
    std::cout << "\n";
  }
  std::cout << (r.all_pass() ? "all checks passed" : "some checks failed") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for the Gelfand-Zetlin, Yangian, quantum torus and Toda constructions"};
  app.require_subcommand(1);

  std::vector<std::string> suites;
  int n_max = 0;
  std::string mode, config_path, out_path;
  uint64_t seed = 0;
  int trials = 10, jobs = 0;
  bool no_timings = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suites, "Suite name (repeatable, comma separated)")->delimiter(',');
  verify->add_option("--n-max", n_max, "Largest N per suite (0: suite default)");
  verify->add_option("--mode", mode, "exact, randomized or both");
  verify->add_option("--seed", seed, "Seed for randomized identity tests");
  verify->add_option("--trials", trials, "Randomized trials per check");
  verify->add_option("--config", config_path, "JSON config; flags override it");
  verify->add_option("--out", out_path, "JSON report path");
  verify->add_option("--jobs", jobs, "Worker threads (default GZTODA_JOBS or 1)");
  verify->add_flag("--no-timings", no_timings, "Leave wall times out of the JSON report");

  int eval_n = 0, points = 0, nodes = 0;
  std::vector<double> gamma;
  double hbar = 0, lo = 0, hi = 0, tail = 0, T = 0;
  std::string rule, eval_config, eval_out;
  int eval_jobs = 0;
  auto* eval = app.add_subcommand("eval", "Evaluate the open Toda eigenfunction on a grid, CSV output");
  eval->add_option("--n", eval_n, "Chain length 1..3");
  eval->add_option("--gamma", gamma, "Spectral labels")->delimiter(',');
  eval->add_option("--hbar", hbar, "Planck constant");
  eval->add_option("--lo", lo, "Grid lower bound");
  eval->add_option("--hi", hi, "Grid upper bound");
  eval->add_option("--points", points, "Grid points per axis");
  eval->add_option("--tail-tolerance", tail, "Quadrature tail tolerance");
  eval->add_option("--T", T, "Truncation");
  eval->add_option("--nodes", nodes, "Nodes per dimension");
  eval->add_option("--rule", rule, "trapezoid or gauss-legendre");
  eval->add_option("--config", eval_config, "JSON config (uses its \"eval\" object); flags override it");
  eval->add_option("--out", eval_out, "CSV path (default stdout)");
  eval->add_option("--jobs", eval_jobs, "Worker threads (default GZTODA_JOBS or 1)");

  auto* list = app.add_subcommand("list", "List suites with their equation anchors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (list->parsed()) {
      std::cout << cli::list_suites();
      return 0;
    }
    if (verify->parsed()) {
      nlohmann::json j = load_config(config_path);
      if (!suites.empty()) j["suites"] = suites;
      if (verify->count("--n-max")) j["n_max"] = n_max;
      if (verify->count("--mode")) j["mode"] = mode;
      if (verify->count("--seed")) j["seed"] = seed;
      if (verify->count("--trials")) j["trials"] = trials;
      if (verify->count("--jobs")) j["jobs"] = jobs;
      else if (!j.contains("jobs")) j["jobs"] = default_jobs();
      j.erase("eval");
      cli::SuiteConfig cfg;
      try {
        cfg = cli::parse_suite_config(j);
      } catch (const Error& e) {
        std::cerr << e.what() << "\nknown suites:\n" << cli::list_suites();
        return kExitConfig;
      }
      const Report r = cli::run_verify(cfg);
      if (!out_path.empty()) write_out(out_path, cli::report_document(r, cfg, !no_timings).dump(2) + "\n");
      print_summary(r, cfg);
      return r.all_pass() ? 0 : kExitFail;
    }
    if (eval->parsed()) {
      nlohmann::json file = load_config(eval_config);
      nlohmann::json j = file.contains("eval") ? file.at("eval") : nlohmann::json::object();
      if (eval->count("--n")) j["N"] = eval_n;
      if (eval->count("--gamma")) j["gamma"] = gamma;
      if (eval->count("--hbar")) j["hbar"] = hbar;
      if (eval->count("--lo")) j["lo"] = lo;
      if (eval->count("--hi")) j["hi"] = hi;
      if (eval->count("--points")) j["points"] = points;
      if (eval->count("--tail-tolerance")) j["tail_tolerance"] = tail;
      if (eval->count("--T")) j["T"] = T;
      if (eval->count("--nodes")) j["nodes"] = nodes;
      if (eval->count("--rule")) j["rule"] = rule;
      const cli::EvalConfig cfg = cli::parse_eval_config(j);
      int threads = eval->count("--jobs") ? eval_jobs : (file.contains("jobs") ? file.at("jobs").get<int>() : default_jobs());
      if (threads < 1) throw Error(ErrorCode::Config, "jobs must be positive");
      try {
        write_out(eval_out, cli::eval_csv(cfg, threads));
      } catch (const Error& e) {
        // Quadrature settings that cannot reach the requested accuracy are a config problem.
        const auto c = e.code();
        if (c == ErrorCode::InsufficientTruncation || c == ErrorCode::ContourObstruction || c == ErrorCode::SizeLimit) {
          std::cerr << e.what() << "\n";
          return kExitConfig;
        }
        throw;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::Config ? kExitConfig : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
