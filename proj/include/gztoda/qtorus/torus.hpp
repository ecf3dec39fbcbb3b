#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>

#include "gztoda/exact/ratfunc.hpp"

namespace gztoda::qtorus {

using exact::ExactScalar;
using exact::RatFunc;
using exact::VarTablePtr;

/// Dynamical positions (n, j), n < N; at most 3 for N <= 3.
inline constexpr int kMaxPositions = 3;

/// Coefficient field Q(i)(s, t, v_nj, vt_nj) with q = s^4 and the dual qt = t^4.
class TorusContext {
 public:
  explicit TorusContext(int N);

  int N() const { return N_; }
  const VarTablePtr& vars() const { return vars_; }
  int positions() const { return N_ * (N_ - 1) / 2; }
  int pos(int n, int j) const;
  std::pair<int, int> row_col(int p) const;

  std::size_t v_index(int n, int j) const;
  std::size_t vt_index(int n, int j) const;
  std::size_t s_index() const { return 0; }
  std::size_t t_index() const { return 1; }

  RatFunc v(int n, int j) const { return RatFunc::var(v_index(n, j)); }
  RatFunc vt(int n, int j) const { return RatFunc::var(vt_index(n, j)); }
  /// q^{k/4} and qt^{k/4}.
  RatFunc q_quarter(int k) const;
  RatFunc qt_quarter(int k) const;
  RatFunc q() const { return q_quarter(4); }
  RatFunc qt() const { return qt_quarter(4); }

 private:
  int N_;
  VarTablePtr vars_;
};

using ContextPtr = std::shared_ptr<const TorusContext>;

/// prod u_p^{u[p]/2} ut_p^{ut[p]/2}; exponents stored doubled.
struct Word {
  std::array<int8_t, kMaxPositions> u{};
  std::array<int8_t, kMaxPositions> ut{};

  bool is_one() const;
  Word operator*(const Word& o) const;
  Word inverse() const;
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Normal-ordered element sum_W c_W(v, vt) * W of the combined torus.
///
/// u_p v_p = q v_p u_p, ut_p vt_p = qt vt_p ut_p; a half-integer power of u
/// picks up a sign against vt (and ut against v); everything else commutes.
class QTorusElement {
 public:
  explicit QTorusElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  QTorusElement(ContextPtr ctx, const RatFunc& c);

  static QTorusElement word(ContextPtr ctx, const Word& w, const RatFunc& c = RatFunc(1));
  /// u_{nj}^{doubled/2}.
  static QTorusElement u(ContextPtr ctx, int n, int j, int doubled);
  static QTorusElement ut(ContextPtr ctx, int n, int j, int doubled);

  const ContextPtr& ctx() const { return ctx_; }
  const std::map<Word, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the empty word if the element has no other terms.
  bool is_coefficient() const;
  RatFunc coefficient(const Word& w) const;

  void add_term(const Word& w, const RatFunc& c);

  QTorusElement operator-() const;
  QTorusElement& operator+=(const QTorusElement& o);
  QTorusElement& operator-=(const QTorusElement& o);
  friend QTorusElement operator+(QTorusElement a, const QTorusElement& b) { return a += b; }
  friend QTorusElement operator-(QTorusElement a, const QTorusElement& b) { return a -= b; }
  friend QTorusElement operator*(const QTorusElement& a, const QTorusElement& b);

  QTorusElement left_mul(const RatFunc& c) const;
  QTorusElement scaled(const ExactScalar& c) const;
  QTorusElement pow(int e) const;
  /// Inverse of a single-term element.
  QTorusElement inverse() const;
  /// Apply a substitution to every coefficient.
  QTorusElement map_coefficients(const std::function<RatFunc(const RatFunc&)>& fn) const;

  friend bool operator==(const QTorusElement& a, const QTorusElement& b);

  std::string to_string() const;

 private:
  ContextPtr ctx_;
  std::map<Word, RatFunc> terms_;
};

/// W c W^{-1} for a coefficient c.
RatFunc conjugate(const TorusContext& ctx, const Word& w, const RatFunc& c);

QTorusElement commutator(const QTorusElement& a, const QTorusElement& b);

std::string word_string(const TorusContext& ctx, const Word& w);

}  // namespace gztoda::qtorus
