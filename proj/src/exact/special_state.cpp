#include "gztoda/exact/special_state.hpp"

#include "gztoda/error.hpp"

namespace gztoda::exact {

namespace {

// Shift a factor's argument by i*hbar along v and confirm it moves by the declared step.
void check_steps(const RatFunc& arg, const std::array<int, kMaxVars>& steps, std::size_t hbar) {
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    const bool occurs = (arg.support() >> v) & 1u;
    if (!occurs && steps[v] == 0) continue;
    if (v == hbar && steps[v] == 0) continue;
    Shift k{};
    k[v] = 1;
    if (shift_ratfunc(arg, k, hbar) - arg != RatFunc(long{steps[v]})) {
      throw Error(ErrorCode::BadStep, "declared step " + std::to_string(steps[v]) + " disagrees with argument " +
                                          arg.to_string() + " in variable " + std::to_string(v));
    }
  }
}

int total_step(const std::array<int, kMaxVars>& steps, const Shift& k) {
  int s = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v) s += steps[v] * k[v];
  return s;
}

}  // namespace

void SpecialState::add_gamma(GammaFactor g) {
  check_steps(g.arg, g.steps, vars_->hbar());
  gammas_.push_back(std::move(g));
}

void SpecialState::add_hbar_power(HbarPower h) {
  check_steps(h.exponent, h.steps, vars_->hbar());
  hbar_powers_.push_back(std::move(h));
}

void SpecialState::add_exp(ExpFactor e) {
  for (const auto& r : e.r) {
    mpq_class twice = 2 * r;
    if (twice.get_den() != 1) throw Error(ErrorCode::BadStep, "exponential factor is not a quarter-turn");
  }
  exps_.push_back(std::move(e));
}

SpecialState SpecialState::with_prefactor(RatFunc p) const {
  SpecialState s = *this;
  s.prefactor_ = std::move(p);
  return s;
}

RatFunc SpecialState::shift_multiplier(const Shift& k) const {
  const std::size_t h = vars_->hbar();
  RatFunc m(1);
  for (const auto& g : gammas_) {
    const int s = total_step(g.steps, k);
    if (s == 0) continue;
    // Gamma(z+s)/Gamma(z) = z(z+1)...(z+s-1); for s < 0 the reciprocal of (z-1)...(z+s).
    RatFunc poch(1);
    if (s > 0) {
      for (int t = 0; t < s; ++t) poch *= g.arg + RatFunc(long{t});
    } else {
      for (int t = 1; t <= -s; ++t) poch *= g.arg - RatFunc(long{t});
      poch = poch.inverse();
    }
    m *= poch.pow(g.multiplicity);
  }
  for (const auto& hp : hbar_powers_) {
    const int s = total_step(hp.steps, k);
    if (s != 0) m *= RatFunc::var(h).pow(s);
  }
  for (const auto& e : exps_) {
    mpq_class phase = 0;
    for (std::size_t v = 0; v < kMaxVars; ++v) phase += e.r[v] * k[v];
    // phase in Z/2; reduce 2*phase mod 4 to pick a power of i.
    mpz_class quarter = mpz_class(2 * phase.get_num() / phase.get_den());
    long q = mpz_class(quarter % 4).get_si();
    if (q < 0) q += 4;
    m = m.scaled(ExactScalar::i().pow(q));
  }
  return m;
}

bool SpecialState::same_core(const SpecialState& o) const {
  if (!same_table(vars_, o.vars_)) return false;
  if (gammas_.size() != o.gammas_.size() || hbar_powers_.size() != o.hbar_powers_.size() ||
      exps_.size() != o.exps_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < gammas_.size(); ++i) {
    if (gammas_[i].arg != o.gammas_[i].arg || gammas_[i].steps != o.gammas_[i].steps ||
        gammas_[i].multiplicity != o.gammas_[i].multiplicity) {
      return false;
    }
  }
  for (std::size_t i = 0; i < hbar_powers_.size(); ++i) {
    if (hbar_powers_[i].exponent != o.hbar_powers_[i].exponent || hbar_powers_[i].steps != o.hbar_powers_[i].steps) {
      return false;
    }
  }
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i].r != o.exps_[i].r) return false;
  }
  return true;
}

std::string SpecialState::to_string() const {
  std::string s = "[" + prefactor_.to_string(vars_.get()) + "]";
  for (const auto& g : gammas_) {
    s += " * Gamma(" + g.arg.to_string(vars_.get()) + ")";
    if (g.multiplicity != 1) s += "^" + std::to_string(g.multiplicity);
  }
  for (const auto& h : hbar_powers_) s += " * hbar^(" + h.exponent.to_string(vars_.get()) + ")";
  if (!exps_.empty()) s += " * exp(...)x" + std::to_string(exps_.size());
  return s;
}

SpecialState apply_special(const DifferenceOperator& op, const SpecialState& s) {
  if (!same_table(op.vars(), s.vars())) throw Error(ErrorCode::VarMismatch, "operator and state tables differ");
  const std::size_t h = s.vars()->hbar();
  RatFunc p;
  for (const auto& [k, c] : op.terms()) {
    p += c * shift_ratfunc(s.prefactor(), k, h) * s.shift_multiplier(k);
  }
  return s.with_prefactor(std::move(p));
}

bool operator==(const SpecialState& a, const SpecialState& b) {
  return a.same_core(b) && a.prefactor() == b.prefactor();
}

}  // namespace gztoda::exact
