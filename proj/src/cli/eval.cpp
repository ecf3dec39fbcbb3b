#include "gztoda/cli/eval.hpp"

#include <cstdio>
#include <set>

#include "gztoda/cli/suites.hpp"
#include "gztoda/error.hpp"
#include "gztoda/parallel.hpp"

namespace gztoda::cli {

toda::EigenfunctionSpec EvalConfig::default_spec() {
  toda::EigenfunctionSpec s;
  s.N = 2;
  s.gamma = {0.7, -0.3};
  s.hbar = 1;
  return s;
}

EvalConfig parse_eval_config(const nlohmann::json& j) {
  EvalConfig c;
  if (!j.is_object()) throw Error(ErrorCode::Config, "eval must be an object");
  static const std::set<std::string> known = {"N", "gamma", "hbar", "lo", "hi", "points", "T", "nodes",
                                              "tail_tolerance", "rule"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw Error(ErrorCode::Config, "unknown key '" + k + "' in eval");
  try {
    auto& s = c.spec;
    s.N = j.value("N", s.N);
    if (j.contains("gamma")) {
      s.gamma.clear();
      for (double g : j.at("gamma").get<std::vector<double>>()) s.gamma.emplace_back(g);
    } else if (s.N != 2) {
      s.gamma.assign(s.N, 0);
      for (int k = 0; k < s.N; ++k) s.gamma[k] = 0.7 - 0.5 * k;
    }
    s.hbar = j.value("hbar", s.hbar);
    s.quad.T = j.value("T", s.quad.T);
    s.quad.nodes = j.value("nodes", s.quad.nodes);
    s.quad.tail_tolerance = j.value("tail_tolerance", s.N == 3 ? 1e-7 : s.quad.tail_tolerance);
    const std::string rule = j.value("rule", std::string("trapezoid"));
    if (rule == "trapezoid") s.quad.rule = toda::QuadRule::Trapezoid;
    else if (rule == "gauss-legendre") s.quad.rule = toda::QuadRule::GaussLegendre;
    else throw Error(ErrorCode::Config, "rule must be trapezoid or gauss-legendre");
    c.lo = j.value("lo", c.lo);
    c.hi = j.value("hi", c.hi);
    c.points = j.value("points", c.points);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Config, std::string("eval: ") + e.what());
  }
  if (c.spec.N < 1 || c.spec.N > 3) throw Error(ErrorCode::Config, "eval supports N = 1, 2, 3");
  if (static_cast<int>(c.spec.gamma.size()) != c.spec.N) throw Error(ErrorCode::Config, "need N labels");
  if (c.points < 1 || !(c.hi >= c.lo)) throw Error(ErrorCode::Config, "bad grid");
  return c;
}

nlohmann::json to_json(const EvalConfig& c) {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& v : c.spec.gamma) g.push_back(v.real());
  return {{"N", c.spec.N},
          {"gamma", g},
          {"hbar", c.spec.hbar},
          {"lo", c.lo},
          {"hi", c.hi},
          {"points", c.points},
          {"T", c.spec.quad.T},
          {"nodes", c.spec.quad.nodes},
          {"tail_tolerance", c.spec.quad.tail_tolerance},
          {"rule", c.spec.quad.rule == toda::QuadRule::Trapezoid ? "trapezoid" : "gauss-legendre"}};
}

std::string eval_csv(const EvalConfig& cfg, int jobs) {
  auto spec = cfg.spec;
  spec.quad.x_extent = std::max(cfg.hi - cfg.lo, 1.0);
  const toda::MBEvaluator ev(spec);
  const auto grid = toda::box_grid(spec.N, cfg.lo, cfg.hi, cfg.points);
  auto rows = parallel_map<std::string>(grid.size(), jobs, [&](std::size_t i) {
    const auto& x = grid[i];
    const toda::cplx v = ev(x);
    std::string row;
    char buf[64];
    for (double xi : x) {
      std::snprintf(buf, sizeof buf, "%.17g,", xi);
      row += buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.3e\n", v.real(), v.imag(), ev.error_estimate(x));
    return row + buf;
  });
  std::string out = "# config_hash=" + config_hash(to_json(cfg)) + "\n";
  for (int n = 1; n <= spec.N; ++n) out += "x" + std::to_string(n) + ",";
  out += "re,im,err\n";
  for (const auto& r : rows) out += r;
  return out;
}

}  // namespace gztoda::cli
