#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "gztoda/exact/multipoly.hpp"

namespace gztoda::exact {

using Factor = std::pair<MultiPoly, int>;

/// p = unit * prod f^m. Strips monomial content and splits binomials a*M^2 - b*N^2
/// whose ratio is a square in Q(i). Factors are monic and sorted.
std::pair<ExactScalar, std::vector<Factor>> factor_lite(const MultiPoly& p);

/// var -> coeff * base^power * var.
struct VarScaling {
  std::size_t var;
  ExactScalar coeff;
  std::size_t base;
  int power;
};

/// Rational function num / prod(f^m) with the denominator kept factored.
///
/// Factors are monic, pairwise distinct and none of them divides num. Two values are
/// equal iff the numerator of their difference is the zero polynomial.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(MultiPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const ExactScalar& c) : num_(c) {}  // NOLINT
  RatFunc(long c) : num_(c) {}  // NOLINT

  static RatFunc var(std::size_t v) { return RatFunc(MultiPoly::var(v)); }
  static RatFunc fraction(const MultiPoly& num, const MultiPoly& den);

  const MultiPoly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  MultiPoly den() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  RatFunc scaled(const ExactScalar& c) const;

  /// Simultaneous v -> v + c_v where no c_v involves a translated variable.
  RatFunc translate(const std::vector<std::pair<std::size_t, MultiPoly>>& subs) const;
  RatFunc substitute(std::size_t v, const RatFunc& r) const;
  /// Simultaneous monomial rescaling; bases must not be rescaled themselves.
  RatFunc rescale(const std::vector<VarScaling>& s) const;

  ExactScalar evaluate(const std::vector<ExactScalar>& point) const;
  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return (a - b).is_zero(); }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  uint32_t support() const;
  std::string to_string(const VarTable* vars = nullptr) const;

 private:
  RatFunc(MultiPoly num, std::vector<Factor> den) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  MultiPoly num_;
  std::vector<Factor> den_;
};

}  // namespace gztoda::exact
