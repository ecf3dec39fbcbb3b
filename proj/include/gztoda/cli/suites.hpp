#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gztoda/report.hpp"
#include "json.hpp"

namespace gztoda::cli {

inline constexpr const char* kVersion = "0.1.0";

struct NumericConfig {
  double hbar = 1;
  std::vector<double> gamma2{0.7, -0.3};
  std::vector<double> gamma3{0.7, -0.3, 0.1};
  double grid_lo = -3;
  double grid_hi = 3;
  int grid_points = 13;
  double tail_tolerance = 1e-12;
  double tail_tolerance_n3 = 1e-7;
  int grid_points_n3 = 3;
  double grid_half_width_n3 = 1;
};

struct SuiteConfig {
  std::vector<std::string> suites;  // empty: all
  int n_max = 0;                    // 0: per-suite default
  Mode mode = Mode::Exact;
  uint64_t seed = 0;
  int trials = 10;
  int jobs = 1;
  int span_length = 3;
  NumericConfig numeric;
};

struct SuiteInfo {
  std::string name;
  std::string anchors;
  std::string description;
  int default_n_max;
  std::function<Report(const SuiteConfig&, int n_max)> run;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo* find_suite(const std::string& name);
/// "name → anchors" lines.
std::string list_suites();

/// Throws Error(Config) on unknown keys, bad types or unknown suite names.
SuiteConfig parse_suite_config(const nlohmann::json& j);
/// Everything that affects results; jobs is left out.
nlohmann::json to_json(const SuiteConfig& cfg);
std::string config_hash(const nlohmann::json& canonical);

Report run_suite(const SuiteInfo& s, const SuiteConfig& cfg);
/// Runs the selected suites; report order follows the selection.
Report run_verify(const SuiteConfig& cfg);

/// Full JSON document: environment block, summary, checks.
nlohmann::json report_document(const Report& r, const SuiteConfig& cfg, bool with_timings = true);

}  // namespace gztoda::cli
