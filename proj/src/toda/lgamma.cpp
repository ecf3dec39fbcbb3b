#include <cmath>
#include <numbers>

#include "gztoda/error.hpp"
#include "gztoda/toda/numeric.hpp"

namespace gztoda::toda {

namespace {

constexpr double kBernoulli[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};

// Valid for Re z >= 0, |z| >= 15.
cplx stirling(cplx z) {
  const double half_log_2pi = 0.5 * std::log(2 * std::numbers::pi);
  cplx r = (z - 0.5) * std::log(z) - z + half_log_2pi;
  const cplx z2 = z * z;
  cplx zp = z;
  for (int k = 1; k <= 8; ++k) {
    r += kBernoulli[k - 1] / (2.0 * k * (2 * k - 1)) / zp;
    zp *= z2;
  }
  return r;
}

// Upward recurrence into the Stirling region.
cplx lgamma_shifted(cplx z) {
  cplx acc = 0;
  while (z.real() < 0 || std::abs(z) < 15) {
    acc += std::log(z);
    z += 1.0;
  }
  return stirling(z) - acc;
}

}  // namespace

cplx lgamma_complex(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw Error(ErrorCode::Pole, "non-finite argument");
  if (z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real()))
    throw Error(ErrorCode::Pole, "Gamma pole at " + std::to_string(z.real()));
  if (z.real() >= -50) return lgamma_shifted(z);

  // Reflection far left; the branch is matched to the leading Stirling term.
  const double pi = std::numbers::pi;
  const cplx r = std::log(pi) - std::log(std::sin(pi * z)) - lgamma_shifted(1.0 - z);
  const cplx lead = (z - 0.5) * std::log(z) - z;
  const double k = std::round((lead.imag() - r.imag()) / (2 * pi));
  return r + cplx(0, 2 * pi * k);
}

}  // namespace gztoda::toda
