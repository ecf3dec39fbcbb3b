#include "gztoda/toda/operators.hpp"

#include <chrono>
#include <sstream>

#include "gztoda/error.hpp"

namespace gztoda::toda {

namespace {

void check_size(int N) {
  if (N < 1 || N > kMaxChain) throw Error(ErrorCode::SizeLimit, "chain length " + std::to_string(N));
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TodaOp TodaOp::scalar(int N, const ExactScalar& c) {
  check_size(N);
  TodaOp r(N);
  r.add_term(TodaKey{}, c);
  return r;
}

TodaOp TodaOp::lambda(int N) {
  check_size(N);
  TodaOp r(N);
  TodaKey k;
  k.lam = 1;
  r.add_term(k, ExactScalar(1));
  return r;
}

TodaOp TodaOp::p(int N, int n) {
  check_size(N);
  if (n < 1 || n > N) throw Error(ErrorCode::Index, "p_" + std::to_string(n));
  TodaOp r(N);
  TodaKey k;
  k.alpha[n - 1] = 1;
  r.add_term(k, ExactScalar(1));
  return r;
}

TodaOp TodaOp::expo(int N, const std::vector<int>& a) {
  check_size(N);
  if (static_cast<int>(a.size()) != N) throw Error(ErrorCode::Mismatch, "exponent length");
  TodaOp r(N);
  TodaKey k;
  for (int n = 0; n < N; ++n) k.a[n] = static_cast<int8_t>(a[n]);
  r.add_term(k, ExactScalar(1));
  return r;
}

void TodaOp::add_term(const TodaKey& k, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TodaOp TodaOp::operator-() const {
  TodaOp r(N_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

TodaOp& TodaOp::operator+=(const TodaOp& o) {
  if (o.N_ != N_) throw Error(ErrorCode::Mismatch, "chain length");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TodaOp& TodaOp::operator-=(const TodaOp& o) {
  if (o.N_ != N_) throw Error(ErrorCode::Mismatch, "chain length");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

// p^alpha exp(b.x) = exp(b.x) prod_n (p_n - i hbar b_n)^{alpha_n}.
TodaOp operator*(const TodaOp& x, const TodaOp& y) {
  if (x.N_ != y.N_) throw Error(ErrorCode::Mismatch, "chain length");
  const int N = x.N_;
  const ExactScalar mi = -ExactScalar::i();
  TodaOp r(N);
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      std::array<int, kMaxChain> j{};
      while (true) {
        ExactScalar c = cx * cy;
        TodaKey k;
        k.lam = kx.lam + ky.lam;
        k.hb = kx.hb + ky.hb;
        for (int n = 0; n < N; ++n) {
          k.a[n] = static_cast<int8_t>(kx.a[n] + ky.a[n]);
          k.alpha[n] = static_cast<int8_t>(kx.alpha[n] - j[n] + ky.alpha[n]);
          if (j[n] > 0) c *= ExactScalar(binomial(kx.alpha[n], j[n])) * (mi * ExactScalar(ky.a[n])).pow(j[n]);
          k.hb += j[n];
        }
        r.add_term(k, c);
        int n = 0;
        for (; n < N; ++n) {
          if (ky.a[n] != 0 && j[n] < kx.alpha[n]) {
            ++j[n];
            break;
          }
          j[n] = 0;
        }
        if (n == N) break;
      }
    }
  }
  return r;
}

int TodaOp::lambda_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.lam);
  return d;
}

TodaOp TodaOp::lambda_coefficient(int d) const {
  TodaOp r(N_);
  for (const auto& [k, c] : terms_) {
    if (k.lam != d) continue;
    TodaKey k2 = k;
    k2.lam = 0;
    r.add_term(k2, c);
  }
  return r;
}

std::string TodaOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (k.hb) os << "*hbar^" << k.hb;
    if (k.lam) os << "*lambda^" << k.lam;
    bool any = false;
    std::ostringstream ex;
    for (int n = 0; n < N_; ++n) {
      if (!k.a[n]) continue;
      if (k.a[n] == 1) ex << (any ? "+" : "") << "x" << n + 1;
      else if (k.a[n] == -1) ex << "-x" << n + 1;
      else ex << (any && k.a[n] > 0 ? "+" : "") << int(k.a[n]) << "*x" << n + 1;
      any = true;
    }
    if (any) os << "*exp(" << ex.str() << ")";
    for (int n = 0; n < N_; ++n) {
      if (k.alpha[n] == 1) os << "*p" << n + 1;
      else if (k.alpha[n] > 1) os << "*p" << n + 1 << "^" << int(k.alpha[n]);
    }
  }
  return os.str();
}

namespace {

std::vector<int> unit(int N, int n, int v) {
  std::vector<int> a(N, 0);
  a[n - 1] = v;
  return a;
}

}  // namespace

TodaOperators build_toda_operators(int N) {
  if (N < 1 || N > 6) throw Error(ErrorCode::SizeLimit, "operator construction supports N <= 6");
  TodaOperators t;
  t.N = N;
  const TodaOp lam = TodaOp::lambda(N);
  const TodaOp one = TodaOp::scalar(N, 1);

  t.A.push_back(one);
  t.A.push_back(lam - TodaOp::p(N, 1));
  for (int n = 2; n <= N; ++n) {
    std::vector<int> a(N, 0);
    a[n - 2] = 1;
    a[n - 1] = -1;
    t.A.push_back((lam - TodaOp::p(N, n)) * t.A[n - 1] - TodaOp::expo(N, a) * t.A[n - 2]);
  }

  // L_n = [[lambda - p_n, e^{-x_n}], [-e^{x_n}, 0]], T = L_N ... L_1.
  TodaOp a = one, b(N), c(N), d = one;
  for (int n = 1; n <= N; ++n) {
    const TodaOp l11 = lam - TodaOp::p(N, n);
    const TodaOp l12 = TodaOp::expo(N, unit(N, n, -1));
    const TodaOp l21 = -TodaOp::expo(N, unit(N, n, 1));
    TodaOp na = l11 * a + l12 * c;
    TodaOp nb = l11 * b + l12 * d;
    TodaOp nc = l21 * a;
    TodaOp nd = l21 * b;
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
  }
  t.TA = a;
  t.TB = b;
  t.TC = c;
  t.TD = d;
  t.t_hat = a + d;

  for (int k = 0; k <= N; ++k) {
    const ExactScalar sign = (k % 2) ? ExactScalar(-1) : ExactScalar(1);
    t.h.push_back(TodaOp::scalar(N, sign) * t.A[N].lambda_coefficient(N - k));
    t.H.push_back(TodaOp::scalar(N, sign) * t.t_hat.lambda_coefficient(N - k));
  }
  return t;
}

TodaOp open_hamiltonian(int N) {
  TodaOp H(N);
  const TodaOp half = TodaOp::scalar(N, ExactScalar::rational(1, 2));
  for (int n = 1; n <= N; ++n) H += half * TodaOp::p(N, n) * TodaOp::p(N, n);
  for (int n = 1; n < N; ++n) {
    std::vector<int> a(N, 0);
    a[n - 1] = 1;
    a[n] = -1;
    H += TodaOp::expo(N, a);
  }
  return H;
}

Report verify_toda_operators(int N) {
  Report r;
  const auto t0 = std::chrono::steady_clock::now();
  TodaOperators t = build_toda_operators(N);
  const double build_ms = ms_since(t0);
  auto add = [&](const std::string& anchor, const std::string& name, const TodaOp& diff, const std::string& note = "") {
    Check c;
    c.anchor = anchor;
    c.name = name;
    c.params = {{"N", N}};
    c.exact_zero = diff.is_zero();
    c.status = c.exact_zero ? Status::Pass : Status::Fail;
    c.residual = c.exact_zero ? 0.0 : static_cast<double>(diff.terms().size());
    if (!c.exact_zero) c.witness = diff.to_string().substr(0, 400);
    c.wall_ms = build_ms;
    c.note = note;
    r.add(std::move(c));
  };
  add("rec3", "recursion A_N = monodromy A_N", t.A[N] - t.TA);
  if (N >= 2) {
    std::vector<int> a(N, 0);
    a[N - 1] = 1;
    // C_N = -e^{x_N} A_{N-1}.
    add("rec3", "monodromy C_N = -exp(x_N) A_{N-1}", t.TC + TodaOp::expo(N, a) * t.A[N - 1]);
  }

  {
    Check c;
    c.anchor = "tch3";
    c.name = "A_N monic of degree N";
    c.params = {{"N", N}};
    const bool ok = t.A[N].lambda_degree() == N && t.A[N].lambda_coefficient(N) == TodaOp::scalar(N, 1);
    c.status = ok ? Status::Pass : Status::Fail;
    c.exact_zero = ok;
    r.add(std::move(c));
  }

  if (N >= 2 && N <= 4) {
    const TodaOp wrap = t.t_hat - t.A[N];
    bool ok = !wrap.is_zero();
    std::string bad;
    for (const auto& [k, c] : wrap.terms()) {
      if (k.a[N - 1] < 1 || k.a[0] > -1) {
        ok = false;
        bad = "term without both exp(x_N) and exp(-x_1)";
      }
    }
    Check c;
    c.anchor = "tch8";
    c.name = "t_hat - A_N has only wrap-around terms";
    c.params = {{"N", N}, {"terms", wrap.terms().size()}};
    c.status = ok ? Status::Pass : Status::Fail;
    c.exact_zero = ok;
    c.witness = bad;
    r.add(std::move(c));
  }

  if (N >= 2) {
    const TodaOp half = TodaOp::scalar(N, ExactScalar::rational(1, 2));
    add("tch1", "H = h_1^2/2 - h_2", open_hamiltonian(N) - (half * t.h[1] * t.h[1] - t.h[2]));
  }
  r.label("toda-spectral", "rec3");
  return r;
}

}  // namespace gztoda::toda
