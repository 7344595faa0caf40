#pragma once

#include <memory>
#include <vector>

#include "maass/complex_branch.hpp"

namespace maass {

/// Gamma(s) for complex s (Lanczos, g = 7, nine coefficients; reflection for
/// Re s < 1/2). Throws DomainError at the poles 0, -1, -2, ...
cplx complex_gamma(cplx s);

/// K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt, x > 0.
cplx bessel_k(cplx nu, double x);
/// Same integral truncated at t = `cutoff` (used to check truncation error).
cplx bessel_k_truncated(cplx nu, double x, double cutoff);
/// Default truncation point used by bessel_k.
double bessel_k_cutoff(cplx nu, double x);

struct WhittakerParams {
  double kappa;
  cplx mu;
};

/// W_{kappa,mu}(y) for y > 0 through
///   e^{-y/2} y^kappa / Gamma(a) int_0^inf e^{-t} t^{a-1} (1 + t/y)^b dt,
///   a = mu - kappa + 1/2, b = mu + kappa - 1/2,
/// after the reflection mu -> -mu when Re a <= 0.
cplx whittaker_w(const WhittakerParams& p, double y);

struct WhittakerValue {
  cplx value;
  cplx derivative;  ///< d/dy
};

/// W and its y-derivative from one pair of integrals.
WhittakerValue whittaker_w_with_derivative(const WhittakerParams& p, double y);

/// Piecewise Chebyshev interpolation of W and W' in s = log y, after removing
/// the factor e^{-y/2} y^kappa. Nodes come from whittaker_w_with_derivative;
/// outside [y_min, y_max] the table falls back to it (or returns 0 where W
/// underflows).
class WhittakerTable {
 public:
  explicit WhittakerTable(const WhittakerParams& p, double y_min = 1e-10, double y_max = 700.0);
  WhittakerValue operator()(double y) const;

  /// Shared table per parameter pair, built on first use.
  static std::shared_ptr<const WhittakerTable> shared(const WhittakerParams& p);

 private:
  WhittakerParams p_;
  double s_min_, s_max_, width_;
  int panels_;
  std::vector<cplx> w_, dw_;  // normalized samples, kNodes per panel
};

}  // namespace maass
