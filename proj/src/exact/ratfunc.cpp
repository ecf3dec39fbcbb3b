#include "gztoda/exact/ratfunc.hpp"

#include <algorithm>
#include <array>

#include "gztoda/error.hpp"

namespace gztoda::exact {

namespace {

void push_factor(std::vector<Factor>& fs, MultiPoly f, int m) {
  for (auto& [g, k] : fs) {
    if (g == f) {
      k += m;
      return;
    }
  }
  fs.emplace_back(std::move(f), m);
}

void sort_factors(std::vector<Factor>& fs) {
  fs.erase(std::remove_if(fs.begin(), fs.end(), [](const Factor& f) { return f.second == 0; }), fs.end());
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return poly_less(a.first, b.first); });
}

bool all_even(const Monomial& m) {
  for (auto e : m.exp) {
    if (e & 1) return false;
  }
  return true;
}

Monomial half(const Monomial& m) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = m.exp[i] / 2;
  r.deg = m.deg / 2;
  return r;
}

void split(MultiPoly q, int mult, ExactScalar& unit, std::vector<Factor>& out) {
  if (q.is_constant()) {
    unit *= q.constant_term().pow(mult);
    return;
  }
  if (q.size() == 2) {
    const auto& [m1, c1] = q.terms()[0];
    const auto& [m2, c2] = q.terms()[1];
    if (all_even(m1) && all_even(m2)) {
      if (auto r = (-c2 / c1).sqrt()) {
        unit *= c1.pow(mult);
        const Monomial a = half(m1);
        const Monomial b = half(m2);
        MultiPoly lo = MultiPoly::term(a, 1) - MultiPoly::term(b, *r);
        MultiPoly hi = MultiPoly::term(a, 1) + MultiPoly::term(b, *r);
        split(std::move(lo), mult, unit, out);
        split(std::move(hi), mult, unit, out);
        return;
      }
    }
  }
  unit *= q.make_monic().pow(mult);
  push_factor(out, std::move(q), mult);
}

MultiPoly expand(const std::vector<Factor>& fs) {
  MultiPoly r(1);
  for (const auto& [f, m] : fs) r *= f.pow(static_cast<unsigned>(m));
  return r;
}

// Cheap refutation of f | num: if f is linear in some x, pick a point on f = 0 and
// evaluate num there. A nonzero value proves non-divisibility.
bool may_divide(const MultiPoly& num, const MultiPoly& f) {
  if (num.total_degree() < f.total_degree()) return false;
  std::size_t x = kMaxVars;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (f.degree(v) == 1) {
      x = v;
      break;
    }
  }
  if (x == kMaxVars) return true;
  static const long kPoint[kMaxVars] = {3, 7, 11, 17, 23, 31, 41, 47, 59, 67, 73, 83, 97, 103, 109, 127};
  std::vector<ExactScalar> pt(kMaxVars);
  for (std::size_t v = 0; v < kMaxVars; ++v) pt[v] = ExactScalar(kPoint[v]);
  const auto parts = f.coefficients_in(x);
  const ExactScalar a = parts[1].evaluate(pt);
  if (a.is_zero()) return true;
  pt[x] = -parts[0].evaluate(pt) / a;
  return num.evaluate(pt).is_zero();
}

// Divide num by the factors as far as possible, lowering multiplicities.
void cancel(MultiPoly& num, std::vector<Factor>& fs) {
  if (num.is_zero()) {
    fs.clear();
    return;
  }
  for (auto& [f, m] : fs) {
    while (m > 0) {
      if (!may_divide(num, f)) break;
      auto q = num.divide_exact(f);
      if (!q) break;
      num = std::move(*q);
      --m;
    }
  }
  sort_factors(fs);
}

// Rescaled polynomial times the monomial needed to clear negative exponents.
std::pair<MultiPoly, Monomial> rescale_poly(const MultiPoly& p, const std::vector<VarScaling>& s) {
  std::vector<std::array<int, kMaxVars>> exps;
  std::vector<ExactScalar> coeffs;
  std::array<int, kMaxVars> lo{};
  for (const auto& [m, c] : p.terms()) {
    std::array<int, kMaxVars> e;
    for (std::size_t v = 0; v < kMaxVars; ++v) e[v] = m.exp[v];
    ExactScalar k = c;
    for (const auto& sc : s) {
      const int d = m.exp[sc.var];
      if (d == 0) continue;
      k *= sc.coeff.pow(d);
      e[sc.base] += sc.power * d;
    }
    for (std::size_t v = 0; v < kMaxVars; ++v) lo[v] = std::min(lo[v], e[v]);
    exps.push_back(e);
    coeffs.push_back(std::move(k));
  }
  Monomial den;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    den.exp[v] = static_cast<uint16_t>(-lo[v]);
    den.deg += den.exp[v];
  }
  std::vector<MultiPoly::Term> terms;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    Monomial m;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      m.exp[v] = static_cast<uint16_t>(exps[i][v] - lo[v]);
      m.deg += m.exp[v];
    }
    terms.emplace_back(m, std::move(coeffs[i]));
  }
  return {MultiPoly::from_terms(std::move(terms)), den};
}

}  // namespace

std::pair<ExactScalar, std::vector<Factor>> factor_lite(const MultiPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::DivZero, "factoring the zero polynomial");
  ExactScalar unit(1);
  std::vector<Factor> out;
  const Monomial content = p.monomial_content();
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (content.exp[v]) push_factor(out, MultiPoly::var(v), content.exp[v]);
  }
  split(content.is_one() ? p : p.divide_monomial(content), 1, unit, out);
  sort_factors(out);
  return {unit, out};
}

RatFunc RatFunc::fraction(const MultiPoly& num, const MultiPoly& den) {
  auto [unit, fs] = factor_lite(den);
  RatFunc r(num.scaled(unit.inverse()), std::move(fs));
  r.reduce();
  return r;
}

MultiPoly RatFunc::den() const { return expand(den_); }

void RatFunc::reduce() { cancel(num_, den_); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.size() == o.den_.size() &&
      std::equal(den_.begin(), den_.end(), o.den_.begin(),
                 [](const Factor& a, const Factor& b) { return a.second == b.second && a.first == b.first; })) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  std::vector<Factor> lcm = den_;
  for (const auto& [f, m] : o.den_) {
    auto it = std::find_if(lcm.begin(), lcm.end(), [&](const Factor& g) { return g.first == f; });
    if (it == lcm.end()) {
      lcm.emplace_back(f, m);
    } else {
      it->second = std::max(it->second, m);
    }
  }
  auto lift = [&](const MultiPoly& n, const std::vector<Factor>& own) {
    MultiPoly r = n;
    for (const auto& [f, m] : lcm) {
      int have = 0;
      for (const auto& [g, k] : own) {
        if (g == f) have = k;
      }
      if (m > have) r *= f.pow(static_cast<unsigned>(m - have));
    }
    return r;
  };
  num_ = lift(num_, den_) + lift(o.num_, o.den_);
  den_ = std::move(lcm);
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  MultiPoly b = o.num_;
  std::vector<Factor> bden = o.den_;
  cancel(num_, bden);
  cancel(b, den_);
  num_ = num_ * b;
  for (auto& [f, m] : bden) push_factor(den_, std::move(f), m);
  sort_factors(den_);
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivZero, "inverse of zero rational function");
  auto [unit, fs] = factor_lite(num_);
  return RatFunc(expand(den_).scaled(unit.inverse()), std::move(fs));
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(num_.pow(static_cast<unsigned>(e)), den_);
  for (auto& [f, m] : r.den_) m *= e;
  if (e == 0) r.den_.clear();
  return r;
}

RatFunc RatFunc::scaled(const ExactScalar& c) const {
  if (c.is_zero()) return {};
  return RatFunc(num_.scaled(c), den_);
}

RatFunc RatFunc::translate(const std::vector<std::pair<std::size_t, MultiPoly>>& subs) const {
  uint32_t touched = 0;
  for (const auto& [v, c] : subs) {
    if (!c.is_zero()) touched |= 1u << v;
  }
  if ((support() & touched) == 0) return *this;
  MultiPoly num = num_.translate(subs);
  std::vector<Factor> fs;
  for (const auto& [f, m] : den_) {
    if ((f.support() & touched) == 0) {
      push_factor(fs, f, m);
      continue;
    }
    auto [unit, parts] = factor_lite(f.translate(subs));
    num = num.scaled(unit.pow(-m));
    for (auto& [g, k] : parts) push_factor(fs, std::move(g), k * m);
  }
  sort_factors(fs);
  // Translation is a ring automorphism, so no new cancellation can occur.
  return RatFunc(std::move(num), std::move(fs));
}

RatFunc RatFunc::substitute(std::size_t v, const RatFunc& r) const {
  if (((support() >> v) & 1u) == 0) return *this;
  auto sub_poly = [&](const MultiPoly& p) -> RatFunc {
    if (r.is_polynomial()) return RatFunc(p.substitute(v, r.num_));
    const auto coeffs = p.coefficients_in(v);
    const unsigned e = static_cast<unsigned>(coeffs.size() - 1);
    const MultiPoly d = r.den();
    MultiPoly h;
    for (unsigned k = 0; k <= e; ++k) {
      if (coeffs[k].is_zero()) continue;
      h += coeffs[k] * r.num_.pow(k) * d.pow(e - k);
    }
    RatFunc out(std::move(h));
    std::vector<Factor> dd = r.den_;
    for (auto& [f, m] : dd) m *= static_cast<int>(e);
    return out * RatFunc(MultiPoly(1), std::move(dd));
  };
  RatFunc result = sub_poly(num_);
  for (const auto& [f, m] : den_) {
    if (((f.support() >> v) & 1u) == 0) {
      result *= RatFunc(MultiPoly(1), {{f, m}});
    } else {
      result /= sub_poly(f).pow(m);
    }
  }
  return result;
}

RatFunc RatFunc::rescale(const std::vector<VarScaling>& s) const {
  uint32_t touched = 0;
  for (const auto& sc : s) touched |= 1u << sc.var;
  if ((support() & touched) == 0) return *this;
  auto [num, num_den] = rescale_poly(num_, s);
  std::vector<Factor> fs;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (num_den.exp[v]) push_factor(fs, MultiPoly::var(v), num_den.exp[v]);
  }
  for (const auto& [f, m] : den_) {
    if ((f.support() & touched) == 0) {
      push_factor(fs, f, m);
      continue;
    }
    auto [g, g_den] = rescale_poly(f, s);
    num *= MultiPoly::term(g_den, 1).pow(static_cast<unsigned>(m));
    auto [unit, parts] = factor_lite(g);
    num = num.scaled(unit.pow(-m));
    for (auto& [h, k] : parts) push_factor(fs, std::move(h), k * m);
  }
  sort_factors(fs);
  RatFunc r(std::move(num), std::move(fs));
  r.reduce();
  return r;
}

ExactScalar RatFunc::evaluate(const std::vector<ExactScalar>& point) const {
  ExactScalar d(1);
  for (const auto& [f, m] : den_) {
    ExactScalar x = f.evaluate(point);
    if (x.is_zero()) throw Error(ErrorCode::DivZero, "denominator vanishes at evaluation point");
    d *= x.pow(m);
  }
  return num_.evaluate(point) / d;
}

std::complex<double> RatFunc::evaluate(const std::vector<std::complex<double>>& point) const {
  std::complex<double> d = 1;
  for (const auto& [f, m] : den_) d *= std::pow(f.evaluate(point), m);
  if (d == 0.0) throw Error(ErrorCode::DivZero, "denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

uint32_t RatFunc::support() const {
  uint32_t s = num_.support();
  for (const auto& [f, m] : den_) s |= f.support();
  return s;
}

std::string RatFunc::to_string(const VarTable* vars) const {
  if (den_.empty()) return num_.to_string(vars);
  std::string s = "(" + num_.to_string(vars) + ")/(";
  bool first = true;
  for (const auto& [f, m] : den_) {
    if (!first) s += "*";
    first = false;
    s += "(" + f.to_string(vars) + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s + ")";
}

}  // namespace gztoda::exact
