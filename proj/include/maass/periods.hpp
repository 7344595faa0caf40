#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "maass/complex_branch.hpp"
#include "maass/maass_forms.hpp"
#include "maass/multiplier.hpp"
#include "maass/quadrature.hpp"

namespace maass {

struct PeriodEvaluation {
  cplx value;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  std::string contour;
};

/// The nearly periodic function attached to u:
///  - Im zeta > 0: f(zeta) = -int_zeta^{i inf} eta_k(u, R_{-k,nu}(., zeta));
///  - Im zeta < 0: f(zeta) = int_{conj zeta}^{i inf} eta_{-k}(R_{-k,nu}(., zeta), u).
/// For holomorphic embeddings E^-_k u = 0 and the integrand collapses to
/// (1 - 2nu - k) R_{2-k,nu} u dz / y, integrated as
/// int_zeta^{i inf} eta_{-k}(R_{-k,nu}(., zeta), u) on H; this is the only
/// route allowed for |Re nu| >= 1/2.
class NearlyPeriodicFunction {
 public:
  explicit NearlyPeriodicFunction(MaassForm u, QuadratureOptions opt = {});

  PeriodEvaluation operator()(cplx zeta) const;

  /// Lower half-plane only: int_zeta^{-i inf} eta_{-k}(u~, R_{k,nu}(., zeta))
  /// in H^-, with u~(z) = u(conj z).
  PeriodEvaluation lower_via_conjugate(cplx zeta) const;

  /// int_zeta^{end} eta_{-k}(R_{-k,nu}(., zeta), u) along the geodesic in H.
  PeriodEvaluation integral_to(cplx zeta, ExtendedComplex end) const;

  const MaassForm& source() const { return u_; }
  const QuadratureOptions& options() const { return opt_; }

 private:
  MaassForm u_;
  QuadratureOptions opt_;
};

/// P(zeta) = int_0^{i inf} eta_{-k}(R_{-k,nu}(., zeta), u), extended to the cut
/// plane C' = C \ (-inf, 0] by moving the path into the second quadrant.
class PeriodFunction {
 public:
  /// Throws UnsupportedParameter for a surrogate with |Re nu| >= 1/2.
  explicit PeriodFunction(MaassForm u, QuadratureOptions opt = {});

  PeriodEvaluation operator()(cplx zeta) const;

  /// Path used for zeta: the imaginary axis when Re zeta > 0, otherwise a path
  /// from 0 to i inf passing left of zeta and conj zeta (a polyline through
  /// -eps + i eps, or a chain of low semicircles through cusps -j/n).
  GeodesicPath contour_for(cplx zeta) const;

  /// Integral of the same 1-form along an arbitrary path in H.
  PeriodEvaluation integral_along(cplx zeta, const GeodesicPath& path) const;

  /// Same period with the other ordering: -int_0^{i inf} eta_k(u, R_{-k,nu}(., zeta)).
  PeriodEvaluation swapped(cplx zeta) const;

  const MaassForm& source() const { return u_; }

 private:
  MaassForm u_;
  QuadratureOptions opt_;
};

PeriodEvaluation eval_f(const NearlyPeriodicFunction& f, cplx zeta);
PeriodEvaluation eval_P(const PeriodFunction& P, cplx zeta);

/// c_+- = 1 - e^{pi i k} e^{+-pi i (2nu - 1)}; rejects parameters with either
/// constant zero.
class BijectionConstants {
 public:
  BijectionConstants(double k, cplx nu);
  cplx c_plus() const { return c_plus_; }
  cplx c_minus() const { return c_minus_; }
  /// c_+ for Im zeta > 0, c_- for Im zeta < 0.
  cplx for_point(cplx zeta) const;

 private:
  cplx c_plus_, c_minus_;
};

/// Parameters shared by the f <-> P maps.
struct PeriodData {
  double k;
  cplx nu;
  MultiplierSystem v;
};

using Evaluatable = std::function<cplx(cplx)>;

/// P(zeta) = f(zeta) - v(S)^{-1} zeta^{2nu-1} f(S zeta).
cplx f_to_P(const Evaluatable& f, const PeriodData& d, cplx zeta);
/// P(zeta) + v(S)^{-1} zeta^{2nu-1} P(S zeta), which equals c_+- f(zeta).
cplx P_to_cf(const Evaluatable& P, const PeriodData& d, cplx zeta);
/// P_to_cf divided by c_+-.
cplx P_to_f(const Evaluatable& P, const PeriodData& d, cplx zeta);

/// P(zeta) - (P||T)(zeta) - (P||T')(zeta).
cplx three_term_residual(const Evaluatable& P, const PeriodData& d, cplx zeta);

/// Holomorphic weight-k cusp form of level one from q-coefficients c_1, c_2, ...
class HolomorphicCuspForm {
 public:
  HolomorphicCuspForm(int k, std::vector<cplx> coefficients);
  int weight() const { return k_; }
  /// u_h(z) for Im z > 0 (reduced to the fundamental domain first).
  cplx operator()(cplx z) const;
  const std::vector<cplx>& coefficients() const { return coeffs_; }

 private:
  int k_;
  std::vector<cplx> coeffs_;
  MaassForm embedding_;
};

HolomorphicCuspForm delta_cusp_form(std::size_t terms = 50);

/// p(zeta) = int_0^{i inf} (zeta - z)^{k-2} u_h(z) dz, evaluated as
/// int_i^{i inf} [(zeta - z)^{k-2} - (zeta z + 1)^{k-2}] u_h(z) dz.
PeriodEvaluation eichler_polynomial(const HolomorphicCuspForm& uh, cplx zeta,
                                    const QuadratureOptions& opt = {});

/// Monomial coefficients of p (index j multiplies zeta^j) from samples at
/// n >= k-1 roots of unity.
std::vector<cplx> eichler_coefficients(const HolomorphicCuspForm& uh, std::size_t n,
                                       const QuadratureOptions& opt = {});

/// f_h(zeta) = int_zeta^{i inf} (zeta - z)^{k-2} u_h(z) dz, Im zeta > 0.
PeriodEvaluation eichler_f(const HolomorphicCuspForm& uh, cplx zeta,
                           const QuadratureOptions& opt = {});

struct GrowthReport {
  std::vector<double> small_points, large_points;
  std::vector<double> small_abs, large_abs;
  double slope_at_zero = 0.0;
  double slope_at_infinity = 0.0;
  double bound_at_zero = 0.0;      ///< min(0, 2 Re nu - 1)
  double bound_at_infinity = 0.0;  ///< max(-1, 2 Re nu - 1)
  double slack = 0.15;
  bool pass_zero = false;
  bool pass_infinity = false;
};

/// Least-squares log-log slopes of |P| on 2^{-j} and 2^{j}, j = 3..10.
GrowthReport growth_check(const PeriodFunction& P);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace maass
