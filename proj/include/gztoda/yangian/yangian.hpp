#pragma once

#include <map>
#include <vector>

#include "gztoda/gzrep/gzrep.hpp"

namespace gztoda::yangian {

using exact::DifferenceOperator;
using exact::RatFunc;
using gzrep::GzRep;

/// GZ realization carrying the spectral parameters lambda and mu.
class YangianRep {
 public:
  explicit YangianRep(int N);

  const GzRep& gz() const { return rep_; }
  int N() const { return rep_.N(); }
  std::size_t lambda() const { return lam_; }
  std::size_t mu() const { return mu_; }
  RatFunc lam() const { return RatFunc::var(lam_); }
  RatFunc mu_var() const { return RatFunc::var(mu_); }

  /// pi_N(T_jk)(x) = x delta_jk - i hbar E_jk for a spectral expression x.
  DifferenceOperator T(int j, int k, const RatFunc& x) const;

  /// Ordered quantum determinant of the submatrix with the given rows and columns.
  DifferenceOperator qdet(const std::vector<int>& rows, const std::vector<int>& cols) const;

  DifferenceOperator A_minor(int n) const;
  DifferenceOperator B_minor(int n) const;
  DifferenceOperator C_minor(int n) const;

  DifferenceOperator A_explicit(int n) const;
  DifferenceOperator B_explicit(int n) const;
  DifferenceOperator C_explicit(int n) const;

  /// Drinfeld generators in lambda.
  DifferenceOperator k(int n) const;
  DifferenceOperator e(int n) const;
  /// f_n = C_n A_n^{-1} at the shifted argument.
  DifferenceOperator f(int n) const;
  /// f_n exactly as printed in the explicit formula list; equals -f(n).
  DifferenceOperator f_printed(int n) const;
  /// e_n with the beta^{-1} shift dropped.
  DifferenceOperator e_unshifted(int n) const;

  /// Replace lambda by mu in every coefficient.
  DifferenceOperator at_mu(const DifferenceOperator& op) const;

 private:
  GzRep rep_;
  std::size_t lam_;
  std::size_t mu_;
};

/// Laurent coefficients at infinity of f in variable v, for powers >= lowest.
std::map<int, RatFunc> series_at_infinity(const RatFunc& f, std::size_t v, int lowest);
/// Coefficient of v^power in the expansion at infinity of every shift coefficient.
DifferenceOperator series_coefficient(const DifferenceOperator& op, std::size_t v, int power);

DifferenceOperator quantum_determinant(const YangianRep& y, int n);

Report verify_quantum_determinant(int N, const VerifyOptions& opts);
Report verify_minors(int N, const VerifyOptions& opts);
Report verify_drinfeld_relations(int N, const VerifyOptions& opts, int max_exponent = 3);
Report verify_cw1(int N, const VerifyOptions& opts);
Report verify_rtt(int N, const VerifyOptions& opts);
Report verify_cartan_factorization(int n_max, const VerifyOptions& opts);
Report residue_recover(int N, const VerifyOptions& opts);

}  // namespace gztoda::yangian
