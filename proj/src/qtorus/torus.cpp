#include "gztoda/qtorus/torus.hpp"

#include "gztoda/error.hpp"

namespace gztoda::qtorus {

using exact::VarInfo;
using exact::VarRole;

TorusContext::TorusContext(int N) : N_(N) {
  if (N < 1 || N > 3) throw Error(ErrorCode::SizeLimit, "quantum torus supports 1 <= N <= 3");
  std::vector<VarInfo> vars{{"s", VarRole::QParam}, {"t", VarRole::QParam}};
  for (int n = 1; n <= N; ++n) {
    for (int j = 1; j <= n; ++j) vars.push_back({"v" + std::to_string(n) + std::to_string(j), VarRole::TorusV, n, j});
  }
  for (int n = 1; n <= N; ++n) {
    for (int j = 1; j <= n; ++j) {
      vars.push_back({"vt" + std::to_string(n) + std::to_string(j), VarRole::TorusDualV, n, j});
    }
  }
  vars_ = std::make_shared<const exact::VarTable>(std::move(vars));
}

int TorusContext::pos(int n, int j) const {
  if (n < 1 || n >= N_ || j < 1 || j > n) {
    throw Error(ErrorCode::Index, "no dynamical torus position (" + std::to_string(n) + "," + std::to_string(j) + ")");
  }
  return (n - 1) * n / 2 + (j - 1);
}

std::pair<int, int> TorusContext::row_col(int p) const {
  int n = 1;
  while (p >= n) {
    p -= n;
    ++n;
  }
  return {n, p + 1};
}

std::size_t TorusContext::v_index(int n, int j) const {
  if (n < 1 || n > N_ || j < 1 || j > n) throw Error(ErrorCode::Index, "v index out of range");
  return 2 + static_cast<std::size_t>((n - 1) * n / 2 + (j - 1));
}

std::size_t TorusContext::vt_index(int n, int j) const {
  return v_index(n, j) + static_cast<std::size_t>(N_ * (N_ + 1) / 2);
}

namespace {

RatFunc power_of(std::size_t var, int k) {
  RatFunc x = RatFunc::var(var);
  return k >= 0 ? x.pow(k) : x.pow(-k).inverse();
}

}  // namespace

RatFunc TorusContext::q_quarter(int k) const { return power_of(s_index(), k); }
RatFunc TorusContext::qt_quarter(int k) const { return power_of(t_index(), k); }

bool Word::is_one() const {
  for (int p = 0; p < kMaxPositions; ++p) {
    if (u[p] || ut[p]) return false;
  }
  return true;
}

Word Word::operator*(const Word& o) const {
  Word r;
  for (int p = 0; p < kMaxPositions; ++p) {
    r.u[p] = static_cast<int8_t>(u[p] + o.u[p]);
    r.ut[p] = static_cast<int8_t>(ut[p] + o.ut[p]);
  }
  return r;
}

Word Word::inverse() const {
  Word r;
  for (int p = 0; p < kMaxPositions; ++p) {
    r.u[p] = static_cast<int8_t>(-u[p]);
    r.ut[p] = static_cast<int8_t>(-ut[p]);
  }
  return r;
}

RatFunc conjugate(const TorusContext& ctx, const Word& w, const RatFunc& c) {
  // u^a v = q^a v u^a and ut^b v = e^{2 pi i b} v ut^b; dually for vt.
  std::vector<exact::VarScaling> sc;
  for (int p = 0; p < ctx.positions(); ++p) {
    const int A = w.u[p];
    const int B = w.ut[p];
    if (A == 0 && B == 0) continue;
    auto [n, j] = ctx.row_col(p);
    sc.push_back({ctx.v_index(n, j), ExactScalar(B % 2 ? -1 : 1), ctx.s_index(), 2 * A});
    sc.push_back({ctx.vt_index(n, j), ExactScalar(A % 2 ? -1 : 1), ctx.t_index(), 2 * B});
  }
  return sc.empty() ? c : c.rescale(sc);
}

QTorusElement::QTorusElement(ContextPtr ctx, const RatFunc& c) : ctx_(std::move(ctx)) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

QTorusElement QTorusElement::word(ContextPtr ctx, const Word& w, const RatFunc& c) {
  QTorusElement e(std::move(ctx));
  e.add_term(w, c);
  return e;
}

QTorusElement QTorusElement::u(ContextPtr ctx, int n, int j, int doubled) {
  Word w;
  w.u[ctx->pos(n, j)] = static_cast<int8_t>(doubled);
  return word(std::move(ctx), w);
}

QTorusElement QTorusElement::ut(ContextPtr ctx, int n, int j, int doubled) {
  Word w;
  w.ut[ctx->pos(n, j)] = static_cast<int8_t>(doubled);
  return word(std::move(ctx), w);
}

bool QTorusElement::is_coefficient() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

RatFunc QTorusElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

void QTorusElement::add_term(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QTorusElement QTorusElement::operator-() const {
  QTorusElement r(ctx_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

QTorusElement& QTorusElement::operator+=(const QTorusElement& o) {
  if (ctx_ != o.ctx_) throw Error(ErrorCode::VarMismatch, "torus elements over different contexts");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

QTorusElement& QTorusElement::operator-=(const QTorusElement& o) { return *this += -o; }

QTorusElement operator*(const QTorusElement& a, const QTorusElement& b) {
  if (a.ctx_ != b.ctx_) throw Error(ErrorCode::VarMismatch, "torus elements over different contexts");
  QTorusElement r(a.ctx_);
  for (const auto& [w1, c1] : a.terms_) {
    for (const auto& [w2, c2] : b.terms_) r.add_term(w1 * w2, c1 * conjugate(*a.ctx_, w1, c2));
  }
  return r;
}

QTorusElement QTorusElement::left_mul(const RatFunc& c) const {
  QTorusElement r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, c * x);
  return r;
}

QTorusElement QTorusElement::scaled(const ExactScalar& c) const { return left_mul(RatFunc(c)); }

QTorusElement QTorusElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QTorusElement r(ctx_, RatFunc(1));
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

QTorusElement QTorusElement::inverse() const {
  if (terms_.size() != 1) throw Error(ErrorCode::DivZero, "only single-term torus elements are inverted");
  const auto& [w, c] = *terms_.begin();
  // (c W)^{-1} = W^{-1} c^{-1} = (W^{-1} c^{-1} W) W^{-1}.
  const Word wi = w.inverse();
  return word(ctx_, wi, conjugate(*ctx_, wi, c.inverse()));
}

QTorusElement QTorusElement::map_coefficients(const std::function<RatFunc(const RatFunc&)>& fn) const {
  QTorusElement r(ctx_);
  for (const auto& [w, c] : terms_) r.add_term(w, fn(c));
  return r;
}

bool operator==(const QTorusElement& a, const QTorusElement& b) { return (a - b).is_zero(); }

std::string word_string(const TorusContext& ctx, const Word& w) {
  std::string s;
  auto exponent = [](int doubled) {
    if (doubled == 2) return std::string();
    if (doubled % 2 == 0) return "^" + std::to_string(doubled / 2);
    return "^(" + std::to_string(doubled) + "/2)";
  };
  for (int p = 0; p < ctx.positions(); ++p) {
    auto [n, j] = ctx.row_col(p);
    const std::string idx = std::to_string(n) + std::to_string(j);
    if (w.u[p]) s += (s.empty() ? "" : "*") + ("u" + idx + exponent(w.u[p]));
    if (w.ut[p]) s += (s.empty() ? "" : "*") + ("ut" + idx + exponent(w.ut[p]));
  }
  return s.empty() ? "1" : s;
}

std::string QTorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "[" + c.to_string(ctx_->vars().get()) + "]";
    if (!w.is_one()) s += "*" + word_string(*ctx_, w);
  }
  return s;
}

QTorusElement commutator(const QTorusElement& a, const QTorusElement& b) { return a * b - b * a; }

}  // namespace gztoda::qtorus
