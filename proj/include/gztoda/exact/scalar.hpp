#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace gztoda::exact {

/// Gaussian rational re + im*i with arbitrary-precision parts.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  // mpq_class(p, q) is not reduced, and GMP comparisons assume reduced operands.
  ExactScalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  ExactScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static ExactScalar i() { return {mpq_class(0), mpq_class(1)}; }
  static ExactScalar rational(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return ExactScalar(q);
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactScalar conj() const { return {re_, -im_}; }
  ExactScalar operator-() const { return {-re_, -im_}; }

  ExactScalar& operator+=(const ExactScalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  ExactScalar inverse() const;
  ExactScalar pow(long e) const;

  /// Square root inside Q(i) when one exists.
  std::optional<ExactScalar> sqrt() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace gztoda::exact
