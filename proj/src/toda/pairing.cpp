#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gztoda/error.hpp"
#include "gztoda/gzrep/gzrep.hpp"
#include "gztoda/toda/numeric.hpp"

namespace gztoda::toda {

using exact::RatFunc;
using exact::SpecialState;

cplx evaluate_state(const SpecialState& s, const std::vector<cplx>& point) {
  const auto& vars = *s.vars();
  if (point.size() != vars.size()) throw Error(ErrorCode::VarMismatch, "point does not match the variable table");
  const cplx hbar = point[vars.hbar()];
  const cplx log_hbar = std::log(hbar);
  cplx lg = 0;
  for (const auto& g : s.gammas()) lg += static_cast<double>(g.multiplicity) * lgamma_complex(g.arg.evaluate(point));
  for (const auto& h : s.hbar_powers()) lg += h.exponent.evaluate(point) * log_hbar;
  for (const auto& e : s.exps()) {
    cplx sum = 0;
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (e.r[v] != 0) sum += e.r[v].get_d() * point[v];
    lg += std::numbers::pi * sum / hbar;
  }
  return s.prefactor().evaluate(point) * std::exp(lg);
}

namespace {

RatFunc poly(const std::vector<long>& c, std::size_t v) {
  RatFunc r(0);
  RatFunc x = RatFunc::var(v);
  RatFunc p(1);
  for (long k : c) {
    r += p.scaled(exact::ExactScalar(k));
    p *= x;
  }
  return r;
}

std::string poly_string(const std::vector<long>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    os << (first ? "" : " + ") << c[k];
    if (k) os << "*g11" << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

Report pairing_check(const PairingConfig& cfg) {
  if (cfg.gamma.size() != 2) throw Error(ErrorCode::Mismatch, "pairing check runs at N = 2");
  if (!(cfg.hbar > 0)) throw Error(ErrorCode::Config, "hbar must be positive");
  const gzrep::GzRep rep(2);
  const std::size_t g11 = rep.gamma(1, 1);
  const SpecialState w = gzrep::whittaker_vector(rep, gzrep::Side::Right).state;
  std::vector<cplx> point(rep.vars()->size(), 0);
  point[rep.hbar()] = cfg.hbar;
  point[rep.gamma(2, 1)] = cfg.gamma[0];
  point[rep.gamma(2, 2)] = cfg.gamma[1];

  // Trapezoid on the real line. Poles of w_2 and its shifts stay at Im <= -hbar/2.
  const double pi = std::numbers::pi;
  const double a = 0.45 * cfg.hbar;
  const double log_tol = std::log(1 / cfg.tail_tolerance);
  const double T = std::max(std::abs(cfg.gamma[0]), std::abs(cfg.gamma[1])) + cfg.hbar * (log_tol + 20) / pi;
  const double h = 2 * pi * a / (log_tol + 5);
  const int n = static_cast<int>(std::ceil(2 * T / h)) + 1;
  std::vector<double> nodes(n);
  for (int k = 0; k < n; ++k) nodes[k] = -T + 2 * T * k / (n - 1);
  const double hk = 2 * T / (n - 1);

  auto integrate = [&](const RatFunc& phi, const SpecialState& psi, double* mass) {
    cplx s = 0;
    double m = 0;
    for (double t : nodes) {
      std::vector<cplx> pt = point;
      pt[g11] = t;
      const cplx v = std::conj(phi.evaluate(pt)) * evaluate_state(psi, pt);
      s += v;
      m += std::abs(v);
    }
    if (mass) *mass = m * hk;
    return s * hk;
  };

  const std::vector<std::pair<std::string, exact::DifferenceOperator>> gens = {
      {"E12", rep.E(1, 2)}, {"E21", rep.E(2, 1)}, {"E11-E22", rep.E(1, 1) - rep.E(2, 2)}};

  Report r;
  bool first = true;
  for (const auto& smp : cfg.samples) {
    const RatFunc phi = poly(smp.phi, g11);
    const SpecialState psi = w.with_prefactor(poly(smp.psi, g11) * w.prefactor());
    double mass = 0;
    const cplx base = integrate(phi, psi, &mass);
    const std::string label = "phi=" + poly_string(smp.phi) + ", psi=(" + poly_string(smp.psi) + ")*w_2";
    nlohmann::json params = {{"N", 2},
                             {"gamma", cfg.gamma},
                             {"hbar", cfg.hbar},
                             {"phi", smp.phi},
                             {"psi", smp.psi},
                             {"T", T},
                             {"nodes", n}};
    if (first) {
      Check c;
      c.anchor = "in1'";
      c.name = "<phi, psi> nonzero, " + label;
      c.params = params;
      c.residual = std::abs(base) / mass;
      c.status = std::abs(base) > 1e-8 * mass ? Status::Pass : Status::Fail;
      std::ostringstream os;
      os.precision(12);
      os << "<phi, psi> = " << base.real() << " + " << base.imag() << "i";
      c.note = os.str();
      r.add(std::move(c));
      first = false;
    }
    for (const auto& [gname, X] : gens) {
      const auto t1 = std::chrono::steady_clock::now();
      const cplx lhs = integrate(phi, exact::apply_special(X, psi), nullptr);
      const cplx rhs = integrate(X.apply(phi), psi, nullptr);
      Check c;
      c.anchor = "inv5";
      c.name = "<phi, X psi> = -<X phi, psi>, X=" + gname + ", " + label;
      c.params = params;
      c.params["X"] = gname;
      double norm = std::abs(base);
      if (norm < 1e-8 * mass) {
        norm = mass;
        c.note = "normalized by the integrand mass since <phi, psi> is small";
      }
      c.residual = std::abs(lhs + rhs) / norm;
      c.status = *c.residual <= cfg.tolerance ? Status::Pass : Status::Fail;
      if (c.status == Status::Fail) {
        std::ostringstream os;
        os.precision(12);
        os << "<phi,X psi>=" << lhs << " <X phi,psi>=" << rhs;
        c.witness = os.str();
      }
      c.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t1).count();
      r.add(std::move(c));
    }
  }
  r.label("pairing", "inv5");
  return r;
}

}  // namespace gztoda::toda
