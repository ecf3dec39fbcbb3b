#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gztoda/exact/scalar.hpp"
#include "gztoda/exact/vartable.hpp"

namespace gztoda::exact {

struct Monomial {
  std::array<uint16_t, kMaxVars> exp{};
  uint32_t deg = 0;

  static Monomial var(std::size_t v, unsigned power = 1);

  bool is_one() const { return deg == 0; }
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // caller checks divides()
  Monomial gcd(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  /// Graded lexicographic; variable 0 is most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg <=> b.deg;
    return a.exp <=> b.exp;
  }
};

/// Sparse multivariate polynomial, terms kept in decreasing grlex order.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, ExactScalar>;

  MultiPoly() = default;
  MultiPoly(const ExactScalar& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(ExactScalar(c)) {}  // NOLINT

  static MultiPoly var(std::size_t v);
  static MultiPoly term(const Monomial& m, const ExactScalar& c);
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  ExactScalar constant_term() const;
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().first.deg; }
  unsigned degree(std::size_t v) const;
  /// Bit v set iff variable v occurs.
  uint32_t support() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const ExactScalar& c) const;
  MultiPoly mul_monomial(const Monomial& m, const ExactScalar& c) const;
  MultiPoly pow(unsigned e) const;

  /// Exact quotient when d divides *this, nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
  Monomial monomial_content() const;
  MultiPoly divide_monomial(const Monomial& m) const;
  /// Divide by the leading coefficient; returns that coefficient.
  ExactScalar make_monic();

  /// Replace variable v by p.
  MultiPoly substitute(std::size_t v, const MultiPoly& p) const;
  /// Replace variable v by v + c for each (v, c); all substitutions simultaneous.
  MultiPoly translate(const std::vector<std::pair<std::size_t, MultiPoly>>& subs) const;
  /// Coefficients of powers of v: result[k] multiplies v^k.
  std::vector<MultiPoly> coefficients_in(std::size_t v) const;

  ExactScalar evaluate(const std::vector<ExactScalar>& point) const;
  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  /// Total order used to sort factor lists.
  friend bool poly_less(const MultiPoly& a, const MultiPoly& b);

  std::string to_string(const VarTable* vars = nullptr) const;

 private:
  void add_scaled(const MultiPoly& o, const ExactScalar& c, const Monomial* m = nullptr);
  std::vector<Term> terms_;
};

std::string monomial_string(const Monomial& m, const VarTable* vars);

}  // namespace gztoda::exact
