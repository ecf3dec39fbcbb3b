#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gztoda/exact/diffop.hpp"

namespace gztoda::exact {

/// Gamma(arg)^multiplicity, where shifting variable v by i*hbar adds steps[v] to arg.
struct GammaFactor {
  RatFunc arg;
  std::array<int, kMaxVars> steps{};
  int multiplicity = 1;
};

/// hbar^exponent with the same step convention as GammaFactor.
struct HbarPower {
  RatFunc exponent;
  std::array<int, kMaxVars> steps{};
};

/// exp(i*pi * sum_v r[v] * gamma_v / (i*hbar)); a shift by i*hbar*k multiplies it by
/// exp(i*pi * sum r[v] k[v]). Each r[v] must lie in Z/2.
struct ExpFactor {
  std::array<mpq_class, kMaxVars> r{};
};

/// prefactor * prod Gamma * prod hbar^... * prod exp(...).
class SpecialState {
 public:
  SpecialState(VarTablePtr vars, RatFunc prefactor) : vars_(std::move(vars)), prefactor_(std::move(prefactor)) {}

  void add_gamma(GammaFactor g);
  void add_hbar_power(HbarPower h);
  void add_exp(ExpFactor e);

  const VarTablePtr& vars() const { return vars_; }
  const RatFunc& prefactor() const { return prefactor_; }
  const std::vector<GammaFactor>& gammas() const { return gammas_; }
  const std::vector<HbarPower>& hbar_powers() const { return hbar_powers_; }
  const std::vector<ExpFactor>& exps() const { return exps_; }

  SpecialState with_prefactor(RatFunc p) const;
  /// Ratio state(gamma + i*hbar*k) / state(gamma) as a rational function.
  RatFunc shift_multiplier(const Shift& k) const;
  bool same_core(const SpecialState& o) const;

  std::string to_string() const;

 private:
  VarTablePtr vars_;
  RatFunc prefactor_;
  std::vector<GammaFactor> gammas_;
  std::vector<HbarPower> hbar_powers_;
  std::vector<ExpFactor> exps_;
};

SpecialState apply_special(const DifferenceOperator& op, const SpecialState& s);

/// Equal cores and equal prefactors.
bool operator==(const SpecialState& a, const SpecialState& b);

}  // namespace gztoda::exact
