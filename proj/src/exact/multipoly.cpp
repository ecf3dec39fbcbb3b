#include "gztoda/exact/multipoly.hpp"

#include <algorithm>
#include <map>

#include "gztoda/error.hpp"

namespace gztoda::exact {

Monomial Monomial::var(std::size_t v, unsigned power) {
  Monomial m;
  m.exp[v] = static_cast<uint16_t>(power);
  m.deg = power;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] > o.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned(exp[i]) + o.exp[i];
    if (e > 0xFFFF) throw Error(ErrorCode::SizeLimit, "monomial exponent overflow");
    r.exp[i] = static_cast<uint16_t>(e);
  }
  r.deg = deg + o.deg;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<uint16_t>(exp[i] - o.exp[i]);
  r.deg = deg - o.deg;
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::min(exp[i], o.exp[i]);
    r.deg += r.exp[i];
  }
  return r;
}

MultiPoly::MultiPoly(const ExactScalar& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

MultiPoly MultiPoly::var(std::size_t v) {
  if (v >= kMaxVars) throw Error(ErrorCode::Index, "variable index out of range");
  return term(Monomial::var(v), ExactScalar(1));
}

MultiPoly MultiPoly::term(const Monomial& m, const ExactScalar& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

ExactScalar MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return ExactScalar(0);
}

unsigned MultiPoly::degree(std::size_t v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m.exp[v]);
  return d;
}

uint32_t MultiPoly::support() const {
  uint32_t mask = 0;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (m.exp[i]) mask |= 1u << i;
    }
  }
  return mask;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

// this += c * m * o, merging two sorted term lists.
void MultiPoly::add_scaled(const MultiPoly& o, const ExactScalar& c, const Monomial* m) {
  if (o.terms_.empty() || c.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial bm = m ? b->first * *m : b->first;
    if (a == terms_.end() || bm > a->first) {
      out.emplace_back(bm, b->second * c);
      ++b;
    } else if (a->first > bm) {
      out.push_back(std::move(*a++));
    } else {
      ExactScalar s = a->second + b->second * c;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, ExactScalar(1));
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, ExactScalar(-1));
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b.scaled(a.terms_[0].second);
  if (b.is_constant()) return a.scaled(b.terms_[0].second);
  const MultiPoly& small = a.size() <= b.size() ? a : b;
  const MultiPoly& big = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return big.mul_monomial(small.terms_[0].first, small.terms_[0].second);
  std::vector<MultiPoly::Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) prods.emplace_back(ma * mb, ca * cb);
  }
  return MultiPoly::from_terms(std::move(prods));
}

MultiPoly MultiPoly::scaled(const ExactScalar& c) const {
  if (c.is_zero()) return {};
  MultiPoly r = *this;
  if (c.is_one()) return r;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const ExactScalar& c) const {
  if (c.is_zero()) return {};
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    t.first = t.first * m;
    if (!c.is_one()) t.second *= c;
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivZero, "polynomial division by zero");
  if (is_zero()) return MultiPoly{};
  if (d.is_constant()) return scaled(d.terms_[0].second.inverse());
  if (total_degree() < d.total_degree()) return std::nullopt;
  const auto& [dm, dc] = d.leading();
  const ExactScalar dinv = dc.inverse();
  MultiPoly r = *this;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!dm.divides(rm)) return std::nullopt;
    Monomial qm = rm / dm;
    ExactScalar qc = rc * dinv;
    r.add_scaled(d, -qc, &qm);
    q.emplace_back(qm, std::move(qc));
  }
  MultiPoly out;
  out.terms_ = std::move(q);  // produced in decreasing order
  return out;
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_[0].first;
  for (const auto& [m, c] : terms_) {
    g = g.gcd(m);
    if (g.is_one()) break;
  }
  return g;
}

MultiPoly MultiPoly::divide_monomial(const Monomial& m) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.first = t.first / m;
  return r;
}

ExactScalar MultiPoly::make_monic() {
  if (terms_.empty()) return ExactScalar(1);
  ExactScalar lc = terms_[0].second;
  if (!lc.is_one()) {
    ExactScalar inv = lc.inverse();
    for (auto& t : terms_) t.second *= inv;
  }
  return lc;
}

MultiPoly MultiPoly::substitute(std::size_t v, const MultiPoly& p) const {
  std::vector<MultiPoly> powers{MultiPoly(1)};
  MultiPoly result;
  // Group by exponent of v to reuse powers of p.
  std::map<unsigned, std::vector<Term>> groups;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    const unsigned e = rest.exp[v];
    rest.exp[v] = 0;
    rest.deg -= e;
    groups[e].emplace_back(rest, c);
  }
  for (auto& [e, ts] : groups) {
    while (powers.size() <= e) powers.push_back(powers.back() * p);
    result += from_terms(std::move(ts)) * powers[e];
  }
  return result;
}

MultiPoly MultiPoly::translate(const std::vector<std::pair<std::size_t, MultiPoly>>& subs) const {
  MultiPoly r = *this;
  // Sequential substitution equals the simultaneous one as long as no c mentions a
  // translated variable, which holds for shifts by multiples of i*hbar.
  for (const auto& [v, c] : subs) {
    if (c.is_zero()) continue;
    r = r.substitute(v, var(v) + c);
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t v) const {
  std::vector<std::vector<Term>> parts(degree(v) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    const unsigned e = rest.exp[v];
    rest.exp[v] = 0;
    rest.deg -= e;
    parts[e].emplace_back(rest, c);
  }
  std::vector<MultiPoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(from_terms(std::move(p)));
  return out;
}

namespace {

template <class T>
std::vector<std::vector<T>> power_tables(const std::vector<T>& point, const std::vector<unsigned>& maxdeg) {
  std::vector<std::vector<T>> pw(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    pw[i].push_back(T(1));
    for (unsigned k = 1; k <= maxdeg[i]; ++k) pw[i].push_back(pw[i].back() * point[i]);
  }
  return pw;
}

}  // namespace

ExactScalar MultiPoly::evaluate(const std::vector<ExactScalar>& point) const {
  std::vector<unsigned> maxdeg(point.size(), 0);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (m.exp[i] == 0) continue;
      if (i >= point.size()) throw Error(ErrorCode::VarMismatch, "evaluation point too short");
      maxdeg[i] = std::max<unsigned>(maxdeg[i], m.exp[i]);
    }
  }
  auto pw = power_tables(point, maxdeg);
  ExactScalar sum(0);
  for (const auto& [m, c] : terms_) {
    ExactScalar t = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (m.exp[i]) t *= pw[i][m.exp[i]];
    }
    sum += t;
  }
  return sum;
}

std::complex<double> MultiPoly::evaluate(const std::vector<std::complex<double>>& point) const {
  std::complex<double> sum = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (m.exp[i] == 0) continue;
      if (i >= point.size()) throw Error(ErrorCode::VarMismatch, "evaluation point too short");
      t *= std::pow(point[i], static_cast<int>(m.exp[i]));
    }
    sum += t;
  }
  return sum;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].first != b.terms_[k].first || a.terms_[k].second != b.terms_[k].second) return false;
  }
  return true;
}

bool poly_less(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& [ma, ca] = a.terms_[k];
    const auto& [mb, cb] = b.terms_[k];
    if (ma != mb) return ma < mb;
    if (ca.re() != cb.re()) return ca.re() < cb.re();
    if (ca.im() != cb.im()) return ca.im() < cb.im();
  }
  return a.terms_.size() < b.terms_.size();
}

std::string monomial_string(const Monomial& m, const VarTable* vars) {
  std::string s;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += (vars && i < vars->size()) ? (*vars)[i].name : "x" + std::to_string(i);
    if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s;
}

std::string MultiPoly::to_string(const VarTable* vars) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (m.is_one()) {
      s += c.to_string();
    } else if (c.is_one()) {
      s += monomial_string(m, vars);
    } else {
      s += c.to_string() + "*" + monomial_string(m, vars);
    }
  }
  return s;
}

}  // namespace gztoda::exact
