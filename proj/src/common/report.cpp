#include "gztoda/report.hpp"

namespace gztoda {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Exact: return "exact";
    case Mode::Randomized: return "randomized";
    case Mode::Both: return "both";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "exact") return Mode::Exact;
  if (s == "randomized") return Mode::Randomized;
  if (s == "both") return Mode::Both;
  return std::nullopt;
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.status == s;
  return n;
}

void Report::label(const std::string& suite, const std::string& anchor) {
  for (auto& c : checks_) {
    if (c.suite.empty()) c.suite = suite;
    if (c.anchor.empty()) c.anchor = anchor;
  }
}

nlohmann::json Report::to_json(bool with_timings) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j;
    j["suite"] = c.suite;
    j["anchor"] = c.anchor;
    j["name"] = c.name;
    j["params"] = c.params;
    j["status"] = to_string(c.status);
    if (c.residual) {
      j["residual"] = *c.residual;
    } else {
      j["residual"] = nullptr;
    }
    j["exact_zero"] = c.exact_zero;
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.note.empty()) j["note"] = c.note;
    if (with_timings) j["wall_ms"] = c.wall_ms;
    out.push_back(std::move(j));
  }
  return out;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace gztoda
