#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gztoda/exact/ratfunc.hpp"

namespace gztoda::exact {

using Shift = std::array<int16_t, kMaxVars>;

bool is_zero_shift(const Shift& k);
Shift operator+(const Shift& a, const Shift& b);
Shift operator-(const Shift& a);

/// f(gamma) -> f(gamma + i*hbar*k).
RatFunc shift_ratfunc(const RatFunc& f, const Shift& k, std::size_t hbar);

/// Finite sum of c_k(gamma) * beta^k acting by f -> c_k * f(gamma + i*hbar*k).
class DifferenceOperator {
 public:
  explicit DifferenceOperator(VarTablePtr vars) : vars_(std::move(vars)) {}

  static DifferenceOperator identity(VarTablePtr vars);
  static DifferenceOperator multiplication(VarTablePtr vars, const RatFunc& c);
  /// beta_v^power.
  static DifferenceOperator shift(VarTablePtr vars, std::size_t v, int power = 1);

  const VarTablePtr& vars() const { return vars_; }
  const std::map<Shift, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the zero shift if the operator is pure multiplication.
  bool is_multiplication() const;
  RatFunc coefficient(const Shift& k) const;

  void add_term(const Shift& k, const RatFunc& c);

  DifferenceOperator operator-() const;
  DifferenceOperator& operator+=(const DifferenceOperator& o);
  DifferenceOperator& operator-=(const DifferenceOperator& o);
  friend DifferenceOperator operator+(DifferenceOperator a, const DifferenceOperator& b) { return a += b; }
  friend DifferenceOperator operator-(DifferenceOperator a, const DifferenceOperator& b) { return a -= b; }
  /// Composition: (a*b)(f) = a(b(f)).
  friend DifferenceOperator operator*(const DifferenceOperator& a, const DifferenceOperator& b);

  /// Left multiplication by a function.
  DifferenceOperator left_mul(const RatFunc& c) const;
  DifferenceOperator scaled(const ExactScalar& c) const;
  /// Apply translate-style substitution to every coefficient (e.g. lambda -> lambda - c).
  DifferenceOperator map_coefficients(const std::function<RatFunc(const RatFunc&)>& fn) const;

  RatFunc apply(const RatFunc& f) const;

  friend bool operator==(const DifferenceOperator& a, const DifferenceOperator& b);
  friend bool operator!=(const DifferenceOperator& a, const DifferenceOperator& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_vars(const DifferenceOperator& o) const;
  VarTablePtr vars_;
  std::map<Shift, RatFunc> terms_;
};

DifferenceOperator commutator(const DifferenceOperator& a, const DifferenceOperator& b);

std::string shift_string(const Shift& k, const VarTable* vars);

}  // namespace gztoda::exact
