#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace gztoda {

enum class Status { Pass, Fail, Skipped };
enum class Mode { Exact, Randomized, Both };

std::string to_string(Status s);
std::string to_string(Mode m);
std::optional<Mode> parse_mode(const std::string& s);

struct VerifyOptions {
  Mode mode = Mode::Exact;
  uint64_t seed = 0;
  int trials = 10;
  long height = 10000;
  int jobs = 1;
};

struct Check {
  std::string suite;
  std::string anchor;
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  Status status = Status::Pass;
  bool exact_zero = false;
  std::optional<double> residual;
  std::string witness;
  double wall_ms = 0;
  std::string note;
};

class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void merge(const Report& o) { checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end()); }
  const std::vector<Check>& checks() const { return checks_; }
  std::vector<Check>& checks() { return checks_; }

  std::size_t count(Status s) const;
  bool all_pass() const { return count(Status::Fail) == 0; }
  /// Stamp suite and anchor on checks that lack them.
  void label(const std::string& suite, const std::string& anchor);

  nlohmann::json to_json(bool with_timings = true) const;

 private:
  std::vector<Check> checks_;
};

uint64_t fnv1a(const std::string& s);

/// Per-check seed so that results do not depend on evaluation order.
inline uint64_t check_seed(uint64_t seed, const std::string& name) { return seed ^ fnv1a(name); }

}  // namespace gztoda
