#include "maass/complex_branch.hpp"

#include <cmath>

#include "maass/errors.hpp"

namespace maass {

CutPlanePoint::CutPlanePoint(cplx value) : value_(value) {
  if (on_cut(value)) throw DomainError("point lies on the cut (-inf, 0]");
}

bool on_cut(cplx z) { return z.imag() == 0.0 && z.real() <= 0.0; }

bool is_positive_real(cplx z) { return z.imag() == 0.0 && z.real() > 0.0; }

double principal_arg(cplx z) {
  if (z.real() == 0.0 && z.imag() == 0.0) {
    throw DomainError("arg of zero is undefined");
  }
  // std::arg(-1 - 0i) would give -pi; the cut belongs to the upper side.
  if (z.imag() == 0.0) return z.real() > 0.0 ? 0.0 : kPi;
  return std::atan2(z.imag(), z.real());
}

cplx principal_pow(cplx z, cplx s) {
  if (z.real() == 0.0 && z.imag() == 0.0) {
    if (s.real() > 0.0) return {0.0, 0.0};
    throw DomainError("0^s requires Re s > 0");
  }
  const double log_abs = std::log(std::abs(z));
  const double theta = principal_arg(z);
  // s * (ln|z| + i theta)
  const double re = s.real() * log_abs - s.imag() * theta;
  const double im = s.imag() * log_abs + s.real() * theta;
  return std::polar(std::exp(re), im);
}

cplx principal_sqrt(cplx z) {
  if (z.real() == 0.0 && z.imag() == 0.0) return {0.0, 0.0};
  const double r = std::sqrt(std::abs(z));
  return std::polar(r, 0.5 * principal_arg(z));
}

bool factorizable(cplx z, cplx w) {
  if (is_positive_real(z) && !on_cut(w)) return true;
  return !on_cut(z) && !on_cut(w) && is_positive_real(z * w);
}

}  // namespace maass
