#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gztoda/error.hpp"
#include "gztoda/toda/numeric.hpp"

namespace gztoda::toda {

namespace {

constexpr double kPi = std::numbers::pi;

void gauss_legendre(int n, std::vector<double>& t, std::vector<double>& w) {
  t.assign(n, 0);
  w.assign(n, 0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    t[i] = -x;
    t[n - 1 - i] = x;
    w[i] = w[n - 1 - i] = 2 / ((1 - x * x) * dp * dp);
  }
}

// log of hbar^{z} Gamma(z) with z = d/(i hbar) + 1/2.
cplx log_gamma_term(cplx d, double hbar) {
  const cplx z = d / cplx(0, hbar) + 0.5;
  return z * std::log(hbar) + lgamma_complex(z);
}

// log 1/|Gamma(d/(i hbar))|^2 = log(u sinh(pi u)/pi), u = d/hbar real; -inf at u = 0.
double log_inverse_gamma_square(double d, double hbar) {
  const double u = std::abs(d / hbar);
  if (u == 0) return -std::numeric_limits<double>::infinity();
  const double a = kPi * u;
  return std::log(u) + a + std::log1p(-std::exp(-2 * a)) - std::log(2.0) - std::log(kPi);
}

}  // namespace

double rho(int N, int k) { return (N - 2.0 * k + 1) / 2; }

MBEvaluator::MBEvaluator(const EigenfunctionSpec& spec) : spec_(spec) {
  const int N = spec.N;
  if (N < 1 || N > 3) throw Error(ErrorCode::SizeLimit, "eigenfunction supports N = 1, 2, 3");
  if (static_cast<int>(spec.gamma.size()) != N) throw Error(ErrorCode::Mismatch, "need N spectral labels");
  if (!(spec.hbar > 0)) throw Error(ErrorCode::Config, "hbar must be positive");
  const auto& q = spec.quad;
  if (!(q.tail_tolerance > 0 && q.tail_tolerance < 1)) throw Error(ErrorCode::Config, "tail tolerance out of range");
  if (q.T < 0 || q.nodes < 0) throw Error(ErrorCode::Config, "negative truncation or node count");
  if (N == 1) return;

  const double hbar = spec.hbar;
  double max_im = -std::numeric_limits<double>::infinity(), max_re = 0;
  for (const auto& g : spec.gamma) {
    max_im = std::max(max_im, g.imag());
    max_re = std::max(max_re, std::abs(g.real()));
  }
  // Poles of the top-row Gamma factors sit at gamma_N - i hbar (k + 1/2).
  const double clearance = hbar / 2 - max_im;
  if (clearance < hbar / 8) {
    std::ostringstream os;
    os << "label imaginary part " << max_im << " leaves clearance " << clearance << " < hbar/8";
    throw Error(ErrorCode::ContourObstruction, os.str());
  }
  strip_ = 0.9 * std::min(hbar / 2, clearance);
  const double log_tol = std::log(1 / q.tail_tolerance);
  T_ = q.T > 0 ? q.T : max_re + hbar * (log_tol + 6) / kPi;
  int n = q.nodes;
  if (n == 0) {
    const double h = 2 * kPi * strip_ / (log_tol + strip_ * q.x_extent / hbar);
    n = static_cast<int>(std::ceil(2 * T_ / h)) + 1;
  }
  if (n < 3) throw Error(ErrorCode::Config, "need at least 3 nodes");
  if (N == 3 && static_cast<double>(n) * n * n > 6e7) throw Error(ErrorCode::SizeLimit, "N=3 node table too large");

  if (q.rule == QuadRule::Trapezoid) {
    const double h = 2 * T_ / (n - 1);
    t_.resize(n);
    w_.assign(n, h);
    for (int k = 0; k < n; ++k) t_[k] = -T_ + k * h;
  } else {
    gauss_legendre(n, t_, w_);
    for (int k = 0; k < n; ++k) {
      t_[k] *= T_;
      w_[k] *= T_;
    }
  }

  std::vector<cplx> top(n, 0);  // sum_m log term(t - gamma_Nm)
  for (int k = 0; k < n; ++k)
    for (const auto& g : spec.gamma) top[k] += log_gamma_term(t_[k] - g, hbar);

  double boundary = 0;
  auto edge = [&](int k) { return k == 0 || k == n - 1; };
  if (N == 2) {
    g_.resize(n);
    for (int k = 0; k < n; ++k) {
      g_[k] = w_[k] * std::exp(top[k]);
      l1_ += std::abs(g_[k]);
      if (edge(k)) boundary += std::abs(g_[k]) / w_[k];
    }
  } else {
    std::vector<cplx> lower(static_cast<std::size_t>(n) * n);  // [a * n + b] term(t_a - t_b)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) lower[a * n + b] = log_gamma_term(t_[a] - t_[b], hbar);
    g_.assign(static_cast<std::size_t>(n) * n * n, 0);
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const double self = log_inverse_gamma_square(t_[b] - t_[c], hbar);
        if (std::isinf(self)) continue;
        const cplx base = top[b] + top[c] + self;
        const double wbc = w_[b] * w_[c];
        cplx* row = &g_[(static_cast<std::size_t>(b) * n + c) * n];
        for (int a = 0; a < n; ++a) {
          row[a] = wbc * w_[a] * std::exp(base + lower[a * n + b] + lower[a * n + c]);
          const double m = std::abs(row[a]);
          l1_ += m;
          if (edge(a) || edge(b) || edge(c)) {
            const double wb = edge(a) ? w_[a] : (edge(b) ? w_[b] : w_[c]);
            boundary += m / wb;
          }
        }
      }
    }
  }
  tail_ = l1_ > 0 ? boundary * hbar / kPi / l1_ : 1;
  if (!(tail_ <= q.tail_tolerance)) {
    std::ostringstream os;
    os << "tail estimate " << tail_ << " exceeds " << q.tail_tolerance << " at T = " << T_;
    throw Error(ErrorCode::InsufficientTruncation, os.str());
  }
}

namespace {

cplx prefactor(const EigenfunctionSpec& spec, const std::vector<double>& x) {
  const int N = spec.N;
  cplx S = 0;
  for (const auto& g : spec.gamma) S += g;
  double xr = 0;
  for (int k = 1; k <= N; ++k) xr += x[k - 1] * rho(N, k);
  return std::exp(-xr + cplx(0, 1) * S * x[N - 1] / spec.hbar);
}

}  // namespace

cplx MBEvaluator::operator()(const std::vector<double>& x) const {
  const int N = spec_.N;
  if (static_cast<int>(x.size()) != N) throw Error(ErrorCode::Mismatch, "point dimension");
  const cplx pref = prefactor(spec_, x);
  if (N == 1) return pref;
  const std::size_t n = t_.size();
  const double hbar = spec_.hbar;
  std::vector<cplx> e1(n);
  for (std::size_t k = 0; k < n; ++k) e1[k] = std::polar(1.0, t_[k] * (x[0] - x[1]) / hbar);
  if (N == 2) {
    cplx s = 0;
    for (std::size_t k = 0; k < n; ++k) s += g_[k] * e1[k];
    return pref * s;
  }
  std::vector<cplx> e2(n);
  for (std::size_t k = 0; k < n; ++k) e2[k] = std::polar(1.0, t_[k] * (x[1] - x[2]) / hbar);
  cplx s = 0;
  for (std::size_t b = 0; b < n; ++b) {
    cplx sb = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const cplx* row = &g_[(b * n + c) * n];
      cplx inner = 0;
      for (std::size_t a = 0; a < n; ++a) inner += row[a] * e1[a];
      sb += e2[c] * inner;
    }
    s += e2[b] * sb;
  }
  return pref * s;
}

double MBEvaluator::magnitude(const std::vector<double>& x) const {
  const double p = std::abs(prefactor(spec_, x));
  return spec_.N == 1 ? p : p * l1_;
}

double MBEvaluator::error_estimate(const std::vector<double>& x) const {
  const double mag = magnitude(x);
  if (spec_.N == 1) return 4 * std::numeric_limits<double>::epsilon() * mag;
  double dx = 0;
  for (int k = 0; k + 1 < spec_.N; ++k) dx = std::max(dx, std::abs(x[k] - x[k + 1]));
  double disc = 0;
  if (spec_.quad.rule == QuadRule::Trapezoid) {
    const double h = w_[0];
    disc = std::exp(-2 * kPi * strip_ / h + strip_ * dx / spec_.hbar);
  }
  return mag * (tail_ + disc) + roundoff(x);
}

double MBEvaluator::roundoff(const std::vector<double>& x) const {
  const double scale = spec_.N == 1 ? 4 * std::numeric_limits<double>::epsilon()
                                    : 1e-15 * std::sqrt(static_cast<double>(g_.size()));
  return magnitude(x) * scale;
}

cplx mb_eigenfunction(const EigenfunctionSpec& spec, const std::vector<double>& x) { return MBEvaluator(spec)(x); }

}  // namespace gztoda::toda
