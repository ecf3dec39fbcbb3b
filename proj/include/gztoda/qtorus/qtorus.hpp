#pragma once

#include <vector>

#include "gztoda/qtorus/torus.hpp"
#include "gztoda/report.hpp"

namespace gztoda::qtorus {

enum class GlKind { K, EUp, EDown };
enum class SlForm { Adjoint, SimplyConnected };
enum class SlKind { K, L, E, F };
enum class Algebra { Gl, SlQ, SlP };

/// Shared context per N; contexts are compared by identity.
ContextPtr context(int N);

/// pi(K_nn), pi(E_{n,n+1}), pi(E_{n+1,n}) in {v, u, q}.
QTorusElement uq_gl_generator(int N, GlKind kind, int n);

/// Images with prod_j v_Nj = 1 imposed by eliminating v_NN.
QTorusElement uq_sl_generator(int N, SlForm form, SlKind kind, int n);

/// Generators of a quantum group realized in the torus, relations taken with parameter qparam.
struct UqImages {
  RatFunc qparam;
  std::vector<QTorusElement> K;  // gl: K_11..K_NN; sl: K_1..K_{N-1}
  std::vector<QTorusElement> E;  // E_{n,n+1} resp. E_n
  std::vector<QTorusElement> F;  // E_{n+1,n} resp. F_n
  std::vector<QTorusElement> L;  // weight-lattice generators, P-forms only
  /// L_n E_m L_n^{-1} = l_weight[n][m] * E_m.
  std::vector<std::vector<RatFunc>> l_weight;
  /// K_n = prod_m L_m^{k_from_l[n][m]}.
  std::vector<std::vector<int>> k_from_l;
};

UqImages gl_images(int N);
UqImages sl_images(int N, SlForm form);
/// (wnc1) in {v, u, q} and (dg2) in {vt, ut, qt}.
std::pair<UqImages, UqImages> dual_images(int N);

/// sl(2) on the adjoint torus {v11^2, u11} and the dual maximal and simply-connected forms.
UqImages sl2_adjoint();
UqImages sl2_dual_maximal();
UqImages sl2_dual_simply_connected();

/// v_NN -> (prod_{j<N} v_Nj)^{-1}, and the same for vt.
RatFunc impose_sl_constraint(const TorusContext& ctx, const RatFunc& c);

Report verify_gl_relations(const UqImages& g, const std::string& tag, const VerifyOptions& opts);
Report verify_sl_relations(const UqImages& g, const std::string& tag, const VerifyOptions& opts);
Report verify_uq_relations(int N, Algebra algebra, const VerifyOptions& opts = {});
/// Dual gl images and the sl(2) adjoint/dual ladder.
Report verify_dual_relations(int N, const VerifyOptions& opts = {});
Report verify_sl2_forms(const VerifyOptions& opts = {});
Report verify_bimodule(int N, const VerifyOptions& opts = {});

/// Check for lhs == rhs in the torus.
Check check_torus(const std::string& name, const QTorusElement& lhs, const QTorusElement& rhs,
                  const VerifyOptions& opts);

using IntMatrix = std::vector<std::vector<long>>;

/// exp(pi i g^T Q g/(w1 w2) + pi (w1 + w2) d.g/(w1 w2)) times a coefficient prefactor.
struct GaussianState {
  ContextPtr ctx;
  std::vector<std::vector<mpq_class>> Q;  // over all GZ positions, v order
  std::vector<mpq_class> d;
  RatFunc prefactor = RatFunc(1);
};

/// G(gamma + i w1 a + i w2 b) / G(gamma) for the word u^a ut^b.
RatFunc shift_multiplier(const GaussianState& g, const Word& w);
/// Prefactor of op(g); the Gaussian core is unchanged.
RatFunc apply(const QTorusElement& op, const GaussianState& g);

struct QWhittakerData {
  GaussianState state;
  std::vector<long> d;      // d_1..d_{N-1}
  std::vector<int> chi;     // (-1)^{d_n}
};

/// The explicit Gaussian solution; c' must have integer row differences.
QWhittakerData q_whittaker_vector(int N, const IntMatrix& c_prime);

Report verify_q_whittaker(int N, const IntMatrix& c_prime, const VerifyOptions& opts = {});
/// Raising-side equations: reports whether a Gaussian-shape solution exists.
Report wv1_existence(int N, const IntMatrix& c_prime, const VerifyOptions& opts = {});

}  // namespace gztoda::qtorus
