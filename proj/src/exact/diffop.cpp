#include "gztoda/exact/diffop.hpp"

#include "gztoda/error.hpp"

namespace gztoda::exact {

bool is_zero_shift(const Shift& k) {
  for (auto e : k) {
    if (e != 0) return false;
  }
  return true;
}

Shift operator+(const Shift& a, const Shift& b) {
  Shift r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<int16_t>(a[i] + b[i]);
  return r;
}

Shift operator-(const Shift& a) {
  Shift r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<int16_t>(-a[i]);
  return r;
}

RatFunc shift_ratfunc(const RatFunc& f, const Shift& k, std::size_t hbar) {
  if (is_zero_shift(k)) return f;
  std::vector<std::pair<std::size_t, MultiPoly>> subs;
  const MultiPoly ih = MultiPoly::term(Monomial::var(hbar), ExactScalar::i());
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (k[v] != 0) subs.emplace_back(v, ih.scaled(ExactScalar(long{k[v]})));
  }
  return f.translate(subs);
}

DifferenceOperator DifferenceOperator::identity(VarTablePtr vars) {
  return multiplication(std::move(vars), RatFunc(1));
}

DifferenceOperator DifferenceOperator::multiplication(VarTablePtr vars, const RatFunc& c) {
  DifferenceOperator op(std::move(vars));
  op.add_term(Shift{}, c);
  return op;
}

DifferenceOperator DifferenceOperator::shift(VarTablePtr vars, std::size_t v, int power) {
  if (v >= vars->size()) throw Error(ErrorCode::Index, "shift variable out of range");
  Shift k{};
  k[v] = static_cast<int16_t>(power);
  DifferenceOperator op(std::move(vars));
  op.add_term(k, RatFunc(1));
  return op;
}

bool DifferenceOperator::is_multiplication() const {
  return terms_.empty() || (terms_.size() == 1 && is_zero_shift(terms_.begin()->first));
}

RatFunc DifferenceOperator::coefficient(const Shift& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? RatFunc() : it->second;
}

void DifferenceOperator::add_term(const Shift& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void DifferenceOperator::check_vars(const DifferenceOperator& o) const {
  if (!same_table(vars_, o.vars_)) throw Error(ErrorCode::VarMismatch, "operators over different variable tables");
}

DifferenceOperator DifferenceOperator::operator-() const {
  DifferenceOperator r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

DifferenceOperator& DifferenceOperator::operator+=(const DifferenceOperator& o) {
  check_vars(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

DifferenceOperator& DifferenceOperator::operator-=(const DifferenceOperator& o) {
  check_vars(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

DifferenceOperator operator*(const DifferenceOperator& a, const DifferenceOperator& b) {
  a.check_vars(b);
  const std::size_t h = a.vars_->hbar();
  DifferenceOperator r(a.vars_);
  for (const auto& [k1, c1] : a.terms_) {
    for (const auto& [k2, c2] : b.terms_) r.add_term(k1 + k2, c1 * shift_ratfunc(c2, k1, h));
  }
  return r;
}

DifferenceOperator DifferenceOperator::left_mul(const RatFunc& c) const {
  DifferenceOperator r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [k, a] : terms_) r.add_term(k, c * a);
  return r;
}

DifferenceOperator DifferenceOperator::scaled(const ExactScalar& c) const {
  DifferenceOperator r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [k, a] : terms_) r.terms_.emplace(k, a.scaled(c));
  return r;
}

DifferenceOperator DifferenceOperator::map_coefficients(const std::function<RatFunc(const RatFunc&)>& fn) const {
  DifferenceOperator r(vars_);
  for (const auto& [k, a] : terms_) r.add_term(k, fn(a));
  return r;
}

RatFunc DifferenceOperator::apply(const RatFunc& f) const {
  const std::size_t h = vars_->hbar();
  RatFunc r;
  for (const auto& [k, c] : terms_) r += c * shift_ratfunc(f, k, h);
  return r;
}

bool operator==(const DifferenceOperator& a, const DifferenceOperator& b) {
  if (!same_table(a.vars_, b.vars_)) return false;
  return (a - b).is_zero();
}

DifferenceOperator commutator(const DifferenceOperator& a, const DifferenceOperator& b) { return a * b - b * a; }

std::string shift_string(const Shift& k, const VarTable* vars) {
  std::string s;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (k[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += "beta[" + ((vars && v < vars->size()) ? (*vars)[v].name : std::to_string(v)) + "]";
    if (k[v] != 1) s += "^" + std::to_string(k[v]);
  }
  return s.empty() ? "1" : s;
}

std::string DifferenceOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "[" + c.to_string(vars_.get()) + "]*" + shift_string(k, vars_.get());
  }
  return s;
}

}  // namespace gztoda::exact
