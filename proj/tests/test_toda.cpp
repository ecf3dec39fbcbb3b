#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gztoda/error.hpp"
#include "gztoda/toda/numeric.hpp"
#include "gztoda/toda/operators.hpp"

using namespace gztoda;
using namespace gztoda::toda;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_all_pass(const Report& r) {
  EXPECT_GT(r.checks().size(), 0u);
  for (const auto& c : r.checks())
    EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.witness << " " << c.note;
}

EigenfunctionSpec two_body() {
  EigenfunctionSpec s;
  s.N = 2;
  s.gamma = {0.7, -0.3};
  s.hbar = 1;
  return s;
}

// K_{i nu}(2 e^{y/2} / hbar) by integrating -hbar^2 chi'' + e^y chi = (hbar nu / 2)^2 chi from the
// large-argument asymptotic series down to y_end with classical RK4.
double bessel_k_imaginary(double nu, double hbar, double y_end) {
  const double z0 = 60;
  const double y0 = 2 * std::log(z0 * hbar / 2);
  const double mu = -nu * nu;  // (i nu)^2
  double k = 0, dk = 0, a = 1;
  for (int j = 0; j < 25; ++j) {
    if (j > 0) a *= (4 * mu - (2 * j - 1) * (2 * j - 1)) / (8.0 * j);
    k += a * std::pow(z0, -j - 0.5);
    dk += a * (-(j + 0.5) * std::pow(z0, -j - 1.5) - std::pow(z0, -j - 0.5));
  }
  const double pref = std::sqrt(kPi / 2) * std::exp(-z0);
  double chi = pref * k;
  double dchi = pref * dk * z0 / 2;  // dz/dy = z/2
  const double c = (hbar * nu / 2) * (hbar * nu / 2);
  auto f = [&](double y, double u) { return (std::exp(y) - c) / (hbar * hbar) * u; };
  const int steps = 200000;
  const double h = (y_end - y0) / steps;
  double y = y0;
  for (int i = 0; i < steps; ++i) {
    const double k1u = dchi, k1v = f(y, chi);
    const double k2u = dchi + h / 2 * k1v, k2v = f(y + h / 2, chi + h / 2 * k1u);
    const double k3u = dchi + h / 2 * k2v, k3v = f(y + h / 2, chi + h / 2 * k2u);
    const double k4u = dchi + h * k3v, k4v = f(y + h, chi + h * k3u);
    chi += h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u);
    dchi += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    y += h;
  }
  return chi;
}

}  // namespace

TEST(LogGamma, SpecialValues) {
  EXPECT_NEAR(std::abs(lgamma_complex(0.5) - std::log(std::sqrt(kPi))), 0, 1e-13);
  EXPECT_NEAR(std::abs(lgamma_complex(5.0) - std::log(24.0)), 0, 1e-13);
  // |Gamma(i)|^2 = pi / sinh(pi).
  EXPECT_NEAR(2 * lgamma_complex(cplx(0, 1)).real(), std::log(kPi / std::sinh(kPi)), 1e-13);
}

TEST(LogGamma, FunctionalEquationOnStrip) {
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> re(-10, 10), im(-50, 50);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const cplx z(re(rng), im(rng));
    worst = std::max(worst, std::abs(lgamma_complex(z + 1.0) - lgamma_complex(z) - std::log(z)));
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(LogGamma, Reflection) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-8, 8), im(-5, 5);
  for (int i = 0; i < 200; ++i) {
    const cplx z(re(rng), im(rng));
    const cplx lhs = std::exp(lgamma_complex(z) + lgamma_complex(1.0 - z));
    const cplx rhs = kPi / std::sin(kPi * z);
    EXPECT_LE(std::abs(lhs / rhs - 1.0), 1e-12) << z;
  }
  const cplx far(-80.3, 0.7);
  EXPECT_NEAR(std::abs(lgamma_complex(far + 1.0) - lgamma_complex(far) - std::log(far)), 0, 1e-9);
}

TEST(LogGamma, Poles) {
  EXPECT_THROW(lgamma_complex(0.0), Error);
  EXPECT_THROW(lgamma_complex(-3.0), Error);
  EXPECT_NO_THROW(lgamma_complex(-2.5));
}

TEST(TodaOperators, TwoBodyTransfer) {
  const auto t = build_toda_operators(2);
  const TodaOp lam = TodaOp::lambda(2), p1 = TodaOp::p(2, 1), p2 = TodaOp::p(2, 2);
  const TodaOp expected = lam * lam - lam * (p1 + p2) + p1 * p2 - TodaOp::expo(2, {1, -1}) - TodaOp::expo(2, {-1, 1});
  EXPECT_EQ(t.t_hat, expected) << t.t_hat.to_string();
  EXPECT_EQ(t.A[2], (lam - p2) * (lam - p1) - TodaOp::expo(2, {1, -1}));
  EXPECT_EQ(t.A[1], lam - p1);
}

TEST(TodaOperators, MomentumPastExponential) {
  // p_1 e^{x_1} = e^{x_1} (p_1 - i hbar).
  const TodaOp lhs = TodaOp::p(1, 1) * TodaOp::expo(1, {1});
  TodaOp rhs = TodaOp::expo(1, {1}) * TodaOp::p(1, 1);
  TodaKey k;
  k.a[0] = 1;
  k.hb = 1;
  rhs.add_term(k, -exact::ExactScalar::i());
  EXPECT_EQ(lhs, rhs);
}

TEST(TodaOperators, ConstructionsAgreeUpToSix) {
  for (int N = 1; N <= 6; ++N) expect_all_pass(verify_toda_operators(N));
  EXPECT_THROW(build_toda_operators(7), Error);
}

TEST(Eigenfunction, PlaneWave) {
  EigenfunctionSpec s;
  s.N = 1;
  s.gamma = {0.7};
  for (double x : {-2.0, 0.0, 1.3}) EXPECT_NEAR(std::abs(mb_eigenfunction(s, {x}) - std::polar(1.0, 0.7 * x)), 0, 1e-15);
}

TEST(Eigenfunction, TwoBodyMatchesBesselOde) {
  const auto s = two_body();
  const MBEvaluator ev(s);
  const double nu = (0.7 - (-0.3)) / s.hbar, S = 0.4;
  for (auto x : std::vector<std::vector<double>>{{0, 0}, {0.5, -0.5}, {-1, 0.8}, {1.2, 0.3}}) {
    const double y = x[0] - x[1];
    const cplx oracle =
        4 * kPi * s.hbar * std::polar(1.0, S * (x[0] + x[1]) / (2 * s.hbar)) * bessel_k_imaginary(nu, s.hbar, y);
    EXPECT_LE(std::abs(ev(x) - oracle) / std::abs(oracle), 1e-6) << x[0] << "," << x[1];
  }
}

TEST(Eigenfunction, GaussLegendreAgrees) {
  auto s = two_body();
  const cplx ref = mb_eigenfunction(s, {0.3, -0.2});
  s.quad.rule = QuadRule::GaussLegendre;
  s.quad.nodes = 400;
  EXPECT_LE(std::abs(mb_eigenfunction(s, {0.3, -0.2}) - ref) / std::abs(ref), 1e-9);
}

TEST(Eigenfunction, Deterministic) {
  const auto s = two_body();
  const cplx a = mb_eigenfunction(s, {0.1, 0.2}), b = mb_eigenfunction(s, {0.1, 0.2});
  EXPECT_EQ(a, b);
}

TEST(Eigenfunction, Errors) {
  auto s = two_body();
  s.quad.T = 2;
  EXPECT_THROW(
      {
        try {
          MBEvaluator ev(s);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::InsufficientTruncation);
          throw;
        }
      },
      Error);
  s = two_body();
  s.gamma[0] = cplx(0.7, 0.4);
  try {
    MBEvaluator ev(s);
    ADD_FAILURE() << "expected obstruction";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ContourObstruction);
  }
  s = two_body();
  s.N = 4;
  s.gamma = {0, 1, 2, 3};
  EXPECT_THROW(MBEvaluator ev(s), Error);
}

TEST(Spectral, PlaneWaveExact) {
  EigenfunctionSpec s;
  s.N = 1;
  s.gamma = {0.7};
  SpectralConfig cfg;
  cfg.grid = box_grid(1, -3, 3, 13);
  cfg.tolerance = 1e-12;
  expect_all_pass(verify_spectral(s, cfg));
}

TEST(Spectral, TwoBody) {
  SpectralConfig cfg;
  cfg.grid = box_grid(2, -3, 3, 13);
  const Report r = verify_spectral(two_body(), cfg);
  expect_all_pass(r);
  EXPECT_EQ(r.checks().size(), 5u);
}

TEST(Spectral, Truncation) { expect_all_pass(verify_truncation(two_body(), {0.2, -0.1})); }

TEST(Spectral, ThreeBodyCoarse) {
  EigenfunctionSpec s;
  s.N = 3;
  s.gamma = {0.7, -0.3, 0.1};
  s.quad.tail_tolerance = 1e-7;
  s.quad.x_extent = 4;
  SpectralConfig cfg;
  cfg.grid = {{0, 0, 0}, {0.5, 0, -0.5}};
  cfg.tolerance = 1e-4;
  expect_all_pass(verify_spectral(s, cfg));
}

TEST(Dual, TwoBody) {
  DualConfig cfg;
  cfg.x = {0.25, -0.5};
  for (int j = 1; j <= 2; ++j) expect_all_pass(verify_dual_equation(two_body(), j, cfg));
}

TEST(Dual, Obstruction) {
  auto s = two_body();
  s.gamma[1] = cplx(-0.3, 0.45);
  DualConfig cfg;
  cfg.x = {0, 0};
  EXPECT_THROW(verify_dual_equation(s, 1, cfg), Error);
}

TEST(Dual, SymmetryProbeIsObservation) {
  const Check c = symmetry_probe(two_body(), {0.3, 0.1});
  EXPECT_EQ(c.status, Status::Skipped);
  ASSERT_TRUE(c.residual.has_value());
}

TEST(Pairing, SkewSymmetry) {
  const Report r = pairing_check(PairingConfig{});
  expect_all_pass(r);
  EXPECT_EQ(r.checks().size(), 10u);
}

TEST(Pairing, BaseMatchesEigenfunctionAtOrigin) {
  // <1, w_2> is the integral defining psi at x = 0.
  const Report r = pairing_check(PairingConfig{});
  const std::string& note = r.checks().front().note;
  const double base = std::stod(note.substr(note.find('=') + 1));
  const cplx psi = mb_eigenfunction(two_body(), {0, 0});
  EXPECT_NEAR(base, psi.real(), 1e-9 * std::abs(psi));
}
