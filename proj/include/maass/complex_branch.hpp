#pragma once

// Principal-branch complex arithmetic. The argument lives in (-pi, pi] and
// the negative real axis is assigned +pi, independent of the sign of a zero
// imaginary part.

#include <complex>

namespace maass {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Point of the cut plane C' = C \ (-inf, 0].
class CutPlanePoint {
 public:
  /// Throws DomainError when `value` lies on (-inf, 0].
  explicit CutPlanePoint(cplx value);
  cplx value() const { return value_; }

 private:
  cplx value_;
};

/// True iff z lies on (-inf, 0]: Im z == 0 and Re z <= 0, tested exactly.
bool on_cut(cplx z);

/// True iff z is real and strictly positive (exact test).
bool is_positive_real(cplx z);

/// Principal argument in (-pi, pi]; arg of a negative real is exactly +pi.
/// Throws DomainError for z = 0.
double principal_arg(cplx z);

/// z^s = |z|^s e^{i s arg z} with the principal argument.
/// pow(0, s) is 0 for Re s > 0 and a DomainError otherwise.
cplx principal_pow(cplx z, cplx s);

/// Principal square root, consistent with principal_arg on the cut.
cplx principal_sqrt(cplx z);

/// Sufficient condition for (zw)^a = z^a w^a for every exponent a:
/// z > 0 and w in C', or z, w in C' with zw > 0.
bool factorizable(cplx z, cplx w);

}  // namespace maass
