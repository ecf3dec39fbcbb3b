#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gztoda/exact/scalar.hpp"
#include "gztoda/report.hpp"

namespace gztoda::toda {

using exact::ExactScalar;

inline constexpr int kMaxChain = 8;

/// lambda^lam * hbar^hb * exp(a.x) * p^alpha, with exponentials ordered left of momenta.
struct TodaKey {
  int lam = 0;
  int hb = 0;
  std::array<int8_t, kMaxChain> a{};
  std::array<int8_t, kMaxChain> alpha{};
  auto operator<=>(const TodaKey&) const = default;
};

/// Polynomial in lambda, hbar and p_n = -i hbar d/dx_n with exp(x) coefficients.
class TodaOp {
 public:
  explicit TodaOp(int N) : N_(N) {}

  static TodaOp scalar(int N, const ExactScalar& c);
  static TodaOp lambda(int N);
  /// p_n, 1-based.
  static TodaOp p(int N, int n);
  static TodaOp expo(int N, const std::vector<int>& a);

  int N() const { return N_; }
  const std::map<TodaKey, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const TodaKey& k, const ExactScalar& c);

  TodaOp operator-() const;
  TodaOp& operator+=(const TodaOp& o);
  TodaOp& operator-=(const TodaOp& o);
  friend TodaOp operator+(TodaOp a, const TodaOp& b) { return a += b; }
  friend TodaOp operator-(TodaOp a, const TodaOp& b) { return a -= b; }
  friend TodaOp operator*(const TodaOp& a, const TodaOp& b);
  friend bool operator==(const TodaOp& a, const TodaOp& b) { return a.N_ == b.N_ && a.terms_ == b.terms_; }

  int lambda_degree() const;
  /// Coefficient of lambda^d as an operator.
  TodaOp lambda_coefficient(int d) const;

  std::string to_string() const;

 private:
  int N_;
  std::map<TodaKey, ExactScalar> terms_;
};

struct TodaOperators {
  int N = 0;
  /// A_0 .. A_N from the three-term recursion.
  std::vector<TodaOp> A;
  /// Monodromy entries of L_N ... L_1.
  TodaOp TA{1}, TB{1}, TC{1}, TD{1};
  TodaOp t_hat{1};
  /// h_k with A_N(lambda) = sum_k (-1)^k lambda^{N-k} h_k; h_0 = 1.
  std::vector<TodaOp> h;
  /// H_k with t_hat(lambda) = sum_k (-1)^k lambda^{N-k} H_k.
  std::vector<TodaOp> H;
};

/// N <= 6.
TodaOperators build_toda_operators(int N);

/// sum p_n^2/2 + sum_{n<N} exp(x_n - x_{n+1}).
TodaOp open_hamiltonian(int N);

Report verify_toda_operators(int N);

}  // namespace gztoda::toda
