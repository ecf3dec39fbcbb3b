#include "gztoda/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "gztoda/error.hpp"
#include "gztoda/gzrep/gzrep.hpp"
#include "gztoda/parallel.hpp"
#include "gztoda/qtorus/qtorus.hpp"
#include "gztoda/toda/numeric.hpp"
#include "gztoda/toda/operators.hpp"
#include "gztoda/yangian/yangian.hpp"

namespace gztoda::cli {

namespace {

VerifyOptions options(const SuiteConfig& cfg) {
  VerifyOptions o;
  o.mode = cfg.mode;
  o.seed = cfg.seed;
  o.trials = cfg.trials;
  o.jobs = cfg.jobs;
  return o;
}

qtorus::IntMatrix nonzero_c_prime(int N) {
  if (N == 2) return {{1, 1}, {1, 0}};
  if (N == 3) return {{1, 1, 0}, {1, 0, 1}, {0, 1, 2}};
  qtorus::IntMatrix m(N, std::vector<long>(N, 0));
  for (int i = 0; i < N; ++i) m[i][i] = 1;
  return m;
}

toda::EigenfunctionSpec toda_spec(const SuiteConfig& cfg, int N) {
  toda::EigenfunctionSpec s;
  s.N = N;
  s.hbar = cfg.numeric.hbar;
  const auto& g = N == 1 ? std::vector<double>{cfg.numeric.gamma2[0]} : (N == 2 ? cfg.numeric.gamma2 : cfg.numeric.gamma3);
  for (double v : g) s.gamma.emplace_back(v);
  s.quad.tail_tolerance = N == 3 ? cfg.numeric.tail_tolerance_n3 : cfg.numeric.tail_tolerance;
  if (N == 3) s.quad.x_extent = 4 * cfg.numeric.grid_half_width_n3;
  else s.quad.x_extent = std::max(cfg.numeric.grid_hi - cfg.numeric.grid_lo, 1.0);
  return s;
}

Report toda_spectral(const SuiteConfig& cfg, int n_max) {
  Report r;
  for (int N = 1; N <= 6; ++N) r.merge(toda::verify_toda_operators(N));
  const auto& nc = cfg.numeric;
  {
    toda::SpectralConfig sc;
    sc.grid = toda::box_grid(1, nc.grid_lo, nc.grid_hi, nc.grid_points);
    sc.tolerance = 1e-12;
    sc.jobs = cfg.jobs;
    r.merge(toda::verify_spectral(toda_spec(cfg, 1), sc));
  }
  if (n_max >= 2) {
    toda::SpectralConfig sc;
    sc.grid = toda::box_grid(2, nc.grid_lo, nc.grid_hi, nc.grid_points);
    sc.tolerance = 1e-6;
    sc.jobs = cfg.jobs;
    r.merge(toda::verify_spectral(toda_spec(cfg, 2), sc));
    r.merge(toda::verify_truncation(toda_spec(cfg, 2), {0.2, -0.1}));
    r.add(toda::symmetry_probe(toda_spec(cfg, 2), {0.3, 0.1}));
  }
  if (n_max >= 3) {
    toda::SpectralConfig sc;
    sc.grid = toda::box_grid(3, -nc.grid_half_width_n3, nc.grid_half_width_n3, nc.grid_points_n3);
    sc.tolerance = 1e-4;
    sc.jobs = cfg.jobs;
    r.merge(toda::verify_spectral(toda_spec(cfg, 3), sc));
  }
  return r;
}

Report toda_dual(const SuiteConfig& cfg, int n_max) {
  Report r;
  toda::DualConfig dc;
  for (int N = 2; N <= std::min(n_max, 3); ++N) {
    dc.x.assign(N, 0);
    dc.x[0] = 0.25;
    dc.x[N - 1] = -0.5;
    for (int j = 1; j <= N; ++j) r.merge(toda::verify_dual_equation(toda_spec(cfg, N), j, dc));
  }
  return r;
}

std::vector<SuiteInfo> make_suites() {
  std::vector<SuiteInfo> s;
  s.push_back({"glN-relations", "m1", "gl(N) commutator table in the Gelfand-Zetlin realization", 3,
               [](const SuiteConfig& c, int n) {
                 Report r;
                 for (int N = 2; N <= n; ++N) {
                   r.merge(gzrep::verify_gl_relations(N, options(c)));
                   r.merge(gzrep::verify_gl_extras(N, options(c)));
                 }
                 return r;
               }});
  s.push_back({"casimir", "cas1/cas2", "A_n(lambda) acts by prod(lambda - gamma_nj)", 3,
               [](const SuiteConfig& c, int n) {
                 Report r;
                 for (int k = 1; k <= n; ++k) r.merge(gzrep::verify_casimir(k, options(c)));
                 return r;
               }});
  s.push_back({"whittaker", "fww'/fww''", "Whittaker vector equations on both sides", 4,
               [](const SuiteConfig& c, int n) {
                 Report r;
                 for (int N = 2; N <= n; ++N) r.merge(gzrep::verify_whittaker(N, options(c)));
                 r.merge(gzrep::verify_lagrange_identity(n, options(c)));
                 return r;
               }});
  s.push_back({"yangian", "first/cw1/y4", "Drinfeld relations, minor relations, quantum determinant", 3,
               [](const SuiteConfig& c, int n) {
                 Report r;
                 for (int N = 2; N <= n; ++N) {
                   r.merge(yangian::verify_drinfeld_relations(N, options(c), 3));
                   r.merge(yangian::verify_cw1(N, options(c)));
                   r.merge(yangian::verify_quantum_determinant(N, options(c)));
                   r.merge(yangian::verify_minors(N, options(c)));
                 }
                 r.merge(yangian::verify_cartan_factorization(n, options(c)));
                 return r;
               }});
  s.push_back({"rtt", "y2", "RTT relation entrywise", 2, [](const SuiteConfig& c, int n) {
                 Report r;
                 for (int N = 2; N <= n; ++N) r.merge(yangian::verify_rtt(N, options(c)));
                 return r;
               }});
  s.push_back({"residue-recovery", "rtt3", "gl(N) generators from Yangian residues", 3,
               [](const SuiteConfig& c, int n) {
                 Report r;
                 for (int N = 2; N <= n; ++N) r.merge(yangian::residue_recover(N, options(c)));
                 return r;
               }});
  s.push_back({"uq-relations", "d1/d3/sln/dg2/ad", "U_q(gl(N)), both sl(N) forms, dual torus, sl(2) forms", 3,
               [](const SuiteConfig& c, int n) {
                 Report r;
                 for (int N = 2; N <= n; ++N) {
                   r.merge(qtorus::verify_uq_relations(N, qtorus::Algebra::Gl, options(c)));
                   r.merge(qtorus::verify_uq_relations(N, qtorus::Algebra::SlQ, options(c)));
                   r.merge(qtorus::verify_uq_relations(N, qtorus::Algebra::SlP, options(c)));
                   r.merge(qtorus::verify_dual_relations(N, options(c)));
                 }
                 r.merge(qtorus::verify_sl2_forms(options(c)));
                 return r;
               }});
  s.push_back({"bimodule", "wnc1/dg2/commt", "primary and dual images commute", 3, [](const SuiteConfig& c, int n) {
                 Report r;
                 for (int N = 2; N <= n; ++N) r.merge(qtorus::verify_bimodule(N, options(c)));
                 return r;
               }});
  s.push_back({"q-whittaker", "wv2/lw3", "Gaussian q-Whittaker vectors", 3, [](const SuiteConfig& c, int n) {
                 Report r;
                 for (int N = 2; N <= n; ++N) {
                   const qtorus::IntMatrix zero(N, std::vector<long>(N, 0));
                   r.merge(qtorus::verify_q_whittaker(N, zero, options(c)));
                   r.merge(qtorus::verify_q_whittaker(N, nonzero_c_prime(N), options(c)));
                   r.merge(qtorus::wv1_existence(N, zero, options(c)));
                 }
                 return r;
               }});
  s.push_back({"toda-spectral", "tch16/rec3/wf1", "open Toda eigenfunction spectral system", 3, toda_spectral});
  s.push_back({"toda-dual", "tch16", "dual (separated) equation at shifted labels", 2, toda_dual});
  s.push_back({"pairing", "inv5", "skew-symmetry of the Whittaker pairing", 2, [](const SuiteConfig& c, int) {
                 toda::PairingConfig pc;
                 pc.gamma = c.numeric.gamma2;
                 pc.hbar = c.numeric.hbar;
                 return toda::pairing_check(pc);
               }});
  s.push_back({"span-probe", "bas1/bas2", "generator words applied to the Whittaker vector", 3,
               [](const SuiteConfig& c, int n) {
                 Report r;
                 for (int N = 2; N <= n; ++N) r.merge(gzrep::verify_span(N, c.span_length, options(c)));
                 return r;
               }});
  return s;
}

template <class T>
T get(const nlohmann::json& j, const std::string& key, const T& fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Config, "bad value for '" + key + "': " + e.what());
  }
}

void reject_unknown(const nlohmann::json& j, const std::set<std::string>& known, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::Config, where + " must be an object");
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw Error(ErrorCode::Config, "unknown key '" + k + "' in " + where);
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all = make_suites();
  return all;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

std::string list_suites() {
  std::ostringstream os;
  for (const auto& s : suites()) os << s.name << " → " << s.anchors << "  (" << s.description << ")\n";
  return os.str();
}

SuiteConfig parse_suite_config(const nlohmann::json& j) {
  reject_unknown(j, {"suites", "n_max", "mode", "seed", "trials", "jobs", "span_length", "numeric", "eval"}, "config");
  SuiteConfig c;
  if (j.contains("suites")) {
    const auto& s = j.at("suites");
    if (s.is_string()) c.suites = {s.get<std::string>()};
    else c.suites = get<std::vector<std::string>>(j, "suites", {});
  }
  for (const auto& name : c.suites)
    if (!find_suite(name)) throw Error(ErrorCode::Config, "unknown suite '" + name + "'");
  c.n_max = get<int>(j, "n_max", c.n_max);
  if (j.contains("mode")) {
    auto m = parse_mode(get<std::string>(j, "mode", ""));
    if (!m) throw Error(ErrorCode::Config, "mode must be exact, randomized or both");
    c.mode = *m;
  }
  c.seed = get<uint64_t>(j, "seed", c.seed);
  c.trials = get<int>(j, "trials", c.trials);
  c.jobs = get<int>(j, "jobs", c.jobs);
  c.span_length = get<int>(j, "span_length", c.span_length);
  if (j.contains("numeric")) {
    const auto& n = j.at("numeric");
    reject_unknown(n,
                   {"hbar", "gamma2", "gamma3", "grid_lo", "grid_hi", "grid_points", "tail_tolerance",
                    "tail_tolerance_n3", "grid_points_n3", "grid_half_width_n3"},
                   "numeric");
    auto& o = c.numeric;
    o.hbar = get<double>(n, "hbar", o.hbar);
    o.gamma2 = get<std::vector<double>>(n, "gamma2", o.gamma2);
    o.gamma3 = get<std::vector<double>>(n, "gamma3", o.gamma3);
    o.grid_lo = get<double>(n, "grid_lo", o.grid_lo);
    o.grid_hi = get<double>(n, "grid_hi", o.grid_hi);
    o.grid_points = get<int>(n, "grid_points", o.grid_points);
    o.tail_tolerance = get<double>(n, "tail_tolerance", o.tail_tolerance);
    o.tail_tolerance_n3 = get<double>(n, "tail_tolerance_n3", o.tail_tolerance_n3);
    o.grid_points_n3 = get<int>(n, "grid_points_n3", o.grid_points_n3);
    o.grid_half_width_n3 = get<double>(n, "grid_half_width_n3", o.grid_half_width_n3);
    if (o.gamma2.size() != 2 || o.gamma3.size() != 3) throw Error(ErrorCode::Config, "gamma2/gamma3 sizes");
  }
  if (c.n_max < 0 || c.n_max > 6) throw Error(ErrorCode::Config, "n_max must be in 0..6");
  if (c.trials < 1) throw Error(ErrorCode::Config, "trials must be positive");
  if (c.jobs < 1) throw Error(ErrorCode::Config, "jobs must be positive");
  return c;
}

nlohmann::json to_json(const SuiteConfig& c) {
  const auto& n = c.numeric;
  return {{"suites", c.suites},
          {"n_max", c.n_max},
          {"mode", to_string(c.mode)},
          {"seed", c.seed},
          {"trials", c.trials},
          {"span_length", c.span_length},
          {"numeric",
           {{"hbar", n.hbar},
            {"gamma2", n.gamma2},
            {"gamma3", n.gamma3},
            {"grid_lo", n.grid_lo},
            {"grid_hi", n.grid_hi},
            {"grid_points", n.grid_points},
            {"tail_tolerance", n.tail_tolerance},
            {"tail_tolerance_n3", n.tail_tolerance_n3},
            {"grid_points_n3", n.grid_points_n3},
            {"grid_half_width_n3", n.grid_half_width_n3}}}};
}

std::string config_hash(const nlohmann::json& canonical) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical.dump())));
  return buf;
}

Report run_suite(const SuiteInfo& s, const SuiteConfig& cfg) {
  Report r = s.run(cfg, cfg.n_max > 0 ? cfg.n_max : s.default_n_max);
  r.label(s.name, s.anchors);
  return r;
}

Report run_verify(const SuiteConfig& cfg) {
  std::vector<const SuiteInfo*> sel;
  if (cfg.suites.empty()) {
    for (const auto& s : suites()) sel.push_back(&s);
  } else {
    for (const auto& name : cfg.suites) {
      const SuiteInfo* s = find_suite(name);
      if (!s) throw Error(ErrorCode::Config, "unknown suite '" + name + "'");
      sel.push_back(s);
    }
  }
  const int workers = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(sel.size())));
  SuiteConfig inner = cfg;
  inner.jobs = std::max(1, cfg.jobs / workers);
  auto parts = parallel_map<Report>(sel.size(), workers, [&](std::size_t i) { return run_suite(*sel[i], inner); });
  Report all;
  for (const auto& p : parts) all.merge(p);
  return all;
}

nlohmann::json report_document(const Report& r, const SuiteConfig& cfg, bool with_timings) {
  const nlohmann::json canon = to_json(cfg);
  nlohmann::json doc;
  doc["environment"] = {{"version", kVersion},
                        {"seed", cfg.seed},
                        {"mode", to_string(cfg.mode)},
                        {"config_hash", config_hash(canon)},
                        {"config", canon}};
  doc["summary"] = {{"total", r.checks().size()},
                    {"pass", r.count(Status::Pass)},
                    {"fail", r.count(Status::Fail)},
                    {"skipped", r.count(Status::Skipped)}};
  doc["checks"] = r.to_json(with_timings);
  return doc;
}

}  // namespace gztoda::cli
