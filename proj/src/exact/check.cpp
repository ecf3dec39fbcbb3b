#include "gztoda/exact/check.hpp"

#include <chrono>

namespace gztoda::exact {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

RandomTestOptions random_options(const VerifyOptions& opts, const std::string& name) {
  RandomTestOptions r;
  r.trials = opts.trials;
  r.seed = check_seed(opts.seed, name);
  r.height = opts.height;
  return r;
}

// Shared verdict logic. exact_equal is evaluated lazily only when needed.
template <class ExactFn, class RandomFn>
Check decide(const std::string& name, const VerifyOptions& opts, ExactFn exact_fn, RandomFn random_fn) {
  const auto t0 = Clock::now();
  Check c;
  c.name = name;
  std::optional<bool> exact_ok;
  std::optional<bool> random_ok;
  std::string exact_witness;
  if (opts.mode != Mode::Randomized) exact_ok = exact_fn(exact_witness);
  RandomTestResult rr;
  if (opts.mode != Mode::Exact) {
    rr = random_fn(random_options(opts, name));
    random_ok = rr.equal;
  }
  if (exact_ok) {
    c.exact_zero = *exact_ok;
    c.residual = *exact_ok ? 0.0 : 1.0;
  }
  const bool ok = exact_ok.value_or(true) && random_ok.value_or(true);
  c.status = ok ? Status::Pass : Status::Fail;
  if (!ok) c.witness = exact_ok && !*exact_ok ? exact_witness : rr.witness_key;
  if (random_ok && !*random_ok && c.witness != rr.witness_key) {
    c.witness += " | random witness at " + rr.witness_key;
  }
  if (random_ok) c.note = "randomized trials=" + std::to_string(rr.trials_run);
  if (exact_ok && random_ok && *exact_ok != *random_ok) c.note += "; exact and randomized verdicts disagree";
  c.wall_ms = ms_since(t0);
  return c;
}

}  // namespace

std::string truncate(std::string s, std::size_t n) {
  if (s.size() > n) s = s.substr(0, n) + "...";
  return s;
}

std::string point_string(const std::vector<ExactScalar>& pt, const VarTable* vars) {
  std::string s = "{";
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (i) s += ", ";
    s += (vars && i < vars->size() ? (*vars)[i].name : std::to_string(i)) + "=" + pt[i].to_string();
  }
  return s + "}";
}

Check check_operators(const std::string& name, const DifferenceOperator& lhs, const DifferenceOperator& rhs,
                      const VerifyOptions& opts) {
  return decide(
      name, opts,
      [&](std::string& w) {
        DifferenceOperator d = lhs - rhs;
        if (!d.is_zero()) w = "residual " + truncate(d.to_string());
        return d.is_zero();
      },
      [&](const RandomTestOptions& ro) {
        auto r = identity_test_random(lhs, rhs, ro);
        if (!r.equal) r.witness_key = "shift " + r.witness_key + " at " + point_string(r.witness, lhs.vars().get());
        return r;
      });
}

Check check_ratfuncs(const std::string& name, const RatFunc& lhs, const RatFunc& rhs, const VarTable& vars,
                     const VerifyOptions& opts) {
  return decide(
      name, opts,
      [&](std::string& w) {
        RatFunc d = lhs - rhs;
        if (!d.is_zero()) w = "residual " + truncate(d.to_string(&vars));
        return d.is_zero();
      },
      [&](const RandomTestOptions& ro) {
        auto r = identity_test_random(lhs, rhs, vars.size(), ro);
        if (!r.equal) r.witness_key = "at " + point_string(r.witness, &vars);
        return r;
      });
}

namespace {

std::string key_identity(const std::string& k) { return k; }

}  // namespace

Check check_coefficient_maps(const std::string& name, const std::map<std::string, RatFunc>& lhs,
                             const std::map<std::string, RatFunc>& rhs, const VarTable& vars,
                             const VerifyOptions& opts) {
  return decide(
      name, opts,
      [&](std::string& w) {
        for (const auto& [k, c] : lhs) {
          auto it = rhs.find(k);
          RatFunc d = it == rhs.end() ? c : c - it->second;
          if (!d.is_zero()) {
            w = "residual at " + k + ": " + truncate(d.to_string(&vars));
            return false;
          }
        }
        for (const auto& [k, c] : rhs) {
          if (!lhs.contains(k) && !c.is_zero()) {
            w = "residual at " + k + ": " + truncate((-c).to_string(&vars));
            return false;
          }
        }
        return true;
      },
      [&](const RandomTestOptions& ro) {
        auto r = identity_test_maps(lhs, rhs, vars.size(), ro, key_identity);
        if (!r.equal) r.witness_key = "word " + r.witness_key + " at " + point_string(r.witness, &vars);
        return r;
      });
}

Check check_states(const std::string& name, const SpecialState& lhs, const SpecialState& rhs,
                   const VerifyOptions& opts) {
  if (!lhs.same_core(rhs)) {
    Check c;
    c.name = name;
    c.status = Status::Fail;
    c.witness = "special-function cores differ";
    return c;
  }
  return check_ratfuncs(name, lhs.prefactor(), rhs.prefactor(), *lhs.vars(), opts);
}

}  // namespace gztoda::exact
