#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gztoda/exact/special_state.hpp"
#include "gztoda/report.hpp"
#include "gztoda/toda/operators.hpp"

namespace gztoda::toda {

using cplx = std::complex<double>;

/// log Gamma on the principal branch (cut along the negative real axis), so that
/// lgamma(z + 1) = lgamma(z) + log z. Throws Pole at non-positive integers.
cplx lgamma_complex(cplx z);

enum class QuadRule { Trapezoid, GaussLegendre };

struct QuadratureConfig {
  double T = 0;      // 0: chosen from tail_tolerance
  int nodes = 0;     // per dimension; 0: chosen from tail_tolerance and x_extent
  double tail_tolerance = 1e-12;
  QuadRule rule = QuadRule::Trapezoid;
  /// Largest |x_n - x_{n+1}| the evaluator is tuned for.
  double x_extent = 6;
};

struct EigenfunctionSpec {
  int N = 2;
  std::vector<cplx> gamma;  // gamma_{N1..NN}
  double hbar = 1;
  QuadratureConfig quad;
};

/// Integral representation of the open Toda eigenfunction on the real contour.
/// Tables depend only on the spec; each evaluation is a weighted exponential sum.
class MBEvaluator {
 public:
  explicit MBEvaluator(const EigenfunctionSpec& spec);

  cplx operator()(const std::vector<double>& x) const;
  /// sum |integrand| at x, the scale for round-off and noise estimates.
  double magnitude(const std::vector<double>& x) const;
  /// Quadrature error estimate at x (absolute): truncation plus discretization plus round-off.
  double error_estimate(const std::vector<double>& x) const;
  /// Round-off part alone. Unlike the quadrature error it is not smooth in x.
  double roundoff(const std::vector<double>& x) const;

  const EigenfunctionSpec& spec() const { return spec_; }
  double T() const { return T_; }
  int nodes() const { return static_cast<int>(t_.size()); }
  /// Relative boundary mass, the truncated-tail estimate.
  double tail_estimate() const { return tail_; }

 private:
  EigenfunctionSpec spec_;
  double T_ = 0;
  double strip_ = 0;
  double tail_ = 0;
  double l1_ = 0;
  std::vector<double> t_;
  std::vector<double> w_;
  // Integrand without phases, times weights. N=2: [k11]; N=3: [(k21*n + k22)*n + k11].
  std::vector<cplx> g_;
};

cplx mb_eigenfunction(const EigenfunctionSpec& spec, const std::vector<double>& x);

/// rho_k = (N - 2k + 1)/2.
double rho(int N, int k);

/// Apply a Toda operator with p_n = -i hbar d/dx_n by a tensor 4th-order central stencil.
struct StencilResult {
  cplx value;
  cplx psi;
  double noise = 0;  // absolute round-off bound of value
};
StencilResult apply_stencil(const TodaOp& op, cplx lambda, const MBEvaluator& psi, const std::vector<double>& x,
                            double step);

struct SpectralConfig {
  std::vector<std::vector<double>> grid;
  std::vector<double> lambdas{0, 1, 2.5};
  double tolerance = 1e-6;
  double step = 0;  // 0: chosen from the quadrature accuracy
  int jobs = 1;
};

/// Square grid with `points` per axis on [lo, hi]^N.
std::vector<std::vector<double>> box_grid(int N, double lo, double hi, int points);

Report verify_spectral(const EigenfunctionSpec& spec, const SpectralConfig& cfg);

/// T versus 1.5 T, and residual behaviour under node doubling.
Report verify_truncation(const EigenfunctionSpec& spec, const std::vector<double>& x);

struct DualConfig {
  std::vector<double> x;
  double tolerance = 1e-5;
  double twice_tolerance = 1e-4;
};

/// A_{N-1}(gamma_Nj) psi = i^{1-N} e^{-x_N} psi_{gamma - i hbar e_j}.
Report verify_dual_equation(const EigenfunctionSpec& spec, int j, const DualConfig& cfg);

/// psi_(g1,g2) against psi_(g2,g1); recorded as an observation.
Check symmetry_probe(const EigenfunctionSpec& spec, const std::vector<double>& x);

/// Numeric value of a special state at a complex point of its variable table.
cplx evaluate_state(const exact::SpecialState& s, const std::vector<cplx>& point);

/// Integer polynomials in g11, ascending powers.
struct PairingSample {
  std::vector<long> phi;
  std::vector<long> psi;  // prefactor of w_2
};

struct PairingConfig {
  std::vector<double> gamma{0.7, -0.3};
  double hbar = 1;
  std::vector<PairingSample> samples{{{1}, {1}}, {{0, 1}, {1}}, {{-1, 0, 1}, {2, 1}}};
  double tolerance = 1e-6;
  double tail_tolerance = 1e-13;
};

Report pairing_check(const PairingConfig& cfg);

}  // namespace gztoda::toda
