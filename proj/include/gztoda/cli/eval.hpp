#pragma once

#include <string>

#include "gztoda/toda/numeric.hpp"
#include "json.hpp"

namespace gztoda::cli {

struct EvalConfig {
  toda::EigenfunctionSpec spec = default_spec();
  double lo = -3;
  double hi = 3;
  int points = 41;

  static toda::EigenfunctionSpec default_spec();
};

/// Reads the "eval" object of a config file. Throws Error(Config).
EvalConfig parse_eval_config(const nlohmann::json& j);
nlohmann::json to_json(const EvalConfig& cfg);

/// "# config_hash=..." line, column header, then one row per grid point.
std::string eval_csv(const EvalConfig& cfg, int jobs);

}  // namespace gztoda::cli
