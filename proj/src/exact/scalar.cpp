#include "gztoda/exact/scalar.hpp"

#include "gztoda/error.hpp"

namespace gztoda::exact {

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  const bool a_real = sgn(im_) == 0;
  const bool b_real = sgn(o.im_) == 0;
  if (a_real && b_real) {
    re_ *= o.re_;
    return *this;
  }
  if (b_real) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (a_real) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  if (sgn(re_) == 0 && sgn(o.re_) == 0) {
    re_ = -(im_ * o.im_);
    im_ = 0;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivZero, "inverse of zero scalar");
  if (sgn(im_) == 0) return ExactScalar(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivZero, "scalar division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

ExactScalar ExactScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ExactScalar result(1);
  ExactScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<ExactScalar> ExactScalar::sqrt() const {
  if (is_zero()) return ExactScalar(0);
  // (x + iy)^2 = a + ib  =>  x^2 = (a + |c|)/2, y^2 = (|c| - a)/2.
  auto modulus = rational_sqrt(re_ * re_ + im_ * im_);
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt((re_ + *modulus) / 2);
  auto y = rational_sqrt((*modulus - re_) / 2);
  if (!x || !y) return std::nullopt;
  mpq_class ys = *y;
  if (sgn(im_) < 0) ys = -ys;
  ExactScalar root(*x, ys);
  if (root * root != *this) return std::nullopt;
  return root;
}

std::string ExactScalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "*i";
  std::string s = "(" + re_.get_str();
  s += sgn(im_) > 0 ? "+" : "-";
  s += mpq_class(abs(im_)).get_str() + "*i)";
  return s;
}

}  // namespace gztoda::exact
