#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gztoda/exact/diffop.hpp"
#include "gztoda/exact/special_state.hpp"
#include "gztoda/report.hpp"

namespace gztoda::gzrep {

using exact::DifferenceOperator;
using exact::RatFunc;
using exact::SpecialState;
using exact::VarTablePtr;

/// Difference-operator realization of U(gl(N)) on functions of gamma_{nj}, n < N.
/// Row N variables are labels and are never shifted.
class GzRep {
 public:
  explicit GzRep(int N, std::vector<std::string> spectral = {});

  int N() const { return N_; }
  const VarTablePtr& vars() const { return vars_; }

  std::size_t gamma(int n, int j) const;
  std::size_t hbar() const { return hbar_; }
  RatFunc g(int n, int j) const { return RatFunc::var(gamma(n, j)); }
  RatFunc h() const { return RatFunc::var(hbar_); }
  /// i*hbar*c for rational c.
  RatFunc ih(const exact::ExactScalar& c = exact::ExactScalar(1)) const;

  /// Image of E_nm (1-based). Non-simple roots are nested commutators along the
  /// neighbour chain m = n +- 1. Thread safe.
  const DifferenceOperator& E(int n, int m) const;
  /// E_jk = [E_jm, E_mk] for an explicit intermediate index m.
  DifferenceOperator E_via(int j, int m, int k) const;

  DifferenceOperator beta(int n, int j, int power = 1) const;
  DifferenceOperator mult(const RatFunc& c) const { return DifferenceOperator::multiplication(vars_, c); }
  DifferenceOperator identity() const { return DifferenceOperator::identity(vars_); }

 private:
  DifferenceOperator simple(int n, int m) const;

  int N_;
  VarTablePtr vars_;
  std::size_t hbar_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<DifferenceOperator>> cache_;
};

/// rho^{(n)}_k = (n - 2k + 1)/2.
exact::ExactScalar rho(int n, int k);

/// sum_{s in S_n} sign(s) prod_k [(lambda - i hbar rho_k) delta_{s(k),k} - i hbar X_{s(k),k}],
/// composed in the order k = 1..n. X(a, b) supplies the matrix entries.
DifferenceOperator ordered_determinant(const GzRep& rep, int n, std::size_t lambda,
                                       const std::function<DifferenceOperator(int, int, const RatFunc&)>& entry);

DifferenceOperator casimir_hu(const GzRep& rep, int n, std::size_t lambda);

Report verify_gl_relations(int N, const VerifyOptions& opts);
Report verify_casimir(int n, const VerifyOptions& opts);
/// Path independence of non-simple roots and [A_N(lambda), E_ij] = 0 at N = 2.
Report verify_gl_extras(int N, const VerifyOptions& opts);

enum class Side { Left, Right };

struct WhittakerVector {
  Side side;
  SpecialState state;
  exact::ExactScalar character_over_hbar;  // chi = character_over_hbar / hbar
};

WhittakerVector whittaker_vector(const GzRep& rep, Side side);
Report verify_whittaker(int N, const VerifyOptions& opts);

/// sum_j prod_{r<n}(g_nj - g_{n-1,r} + i hbar/2) / prod_{s != j}(g_nj - g_ns) = 1.
Report verify_lagrange_identity(int n_max, const VerifyOptions& opts);

struct SpanProbe {
  std::string word;
  bool member = false;
  int degree = 0;
  std::string detail;
};

/// Applies words in the generator images of length <= max_len to w_N and checks that the
/// result is a polynomial in the dynamical rows, symmetric in each row, times w_N.
std::vector<SpanProbe> module_span_probe(int N, int max_len);
Report verify_span(int N, int max_len, const VerifyOptions& opts);

/// Row-symmetric polynomial test used by the span probe.
bool is_row_symmetric_polynomial(const GzRep& rep, const RatFunc& f, int* degree = nullptr);

}  // namespace gztoda::gzrep
