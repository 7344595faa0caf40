#include "maass/periods.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "maass/errors.hpp"
#include "maass/ms_kernel.hpp"

namespace maass {

namespace {

constexpr cplx kI(0.0, 1.0);

bool is_holomorphic(const MaassForm& u) { return u.backend() == Backend::holomorphic_embedding; }

// The collapsed integrand (1 - 2nu - k) R_{2-k} u dz / y vanishes identically.
bool collapsed_to_zero(const MaassForm& u) {
  return is_holomorphic(u) && std::abs(1.0 - 2.0 * u.nu() - u.weight()) < 1e-14;
}

AnchoredFormField kernel_first(const MaassForm& u, cplx zeta) {
  return [&u, zeta](const PathPoint& p) {
    const KernelOperand R(-u.weight(), u.nu(), zeta);
    return eta_form(-u.weight(), R, u, p);
  };
}

AnchoredFormField form_first(const MaassForm& u, cplx zeta) {
  return [&u, zeta](const PathPoint& p) {
    const KernelOperand R(-u.weight(), u.nu(), zeta);
    return eta_form(u.weight(), u, R, p);
  };
}

PeriodEvaluation to_eval(const QuadratureResult& r, const GeodesicPath& path, cplx sign = 1.0) {
  return {sign * r.value, r.abs_error_estimate, r.evaluations, path.describe()};
}

void require_off_axis(cplx zeta) {
  if (zeta.imag() == 0.0) throw DomainError("point must lie off the real axis");
}

}  // namespace

NearlyPeriodicFunction::NearlyPeriodicFunction(MaassForm u, QuadratureOptions opt)
    : u_(std::move(u)), opt_(opt) {}

PeriodEvaluation NearlyPeriodicFunction::operator()(cplx zeta) const {
  require_off_axis(zeta);
  const double k = u_.weight();
  const double re_nu = u_.nu().real();
  const bool holo = is_holomorphic(u_);
  if (!holo && std::abs(re_nu) >= 0.5) {
    throw UnsupportedParameter("nearly periodic function needs |Re nu| < 1/2");
  }
  const bool upper = zeta.imag() > 0.0;
  const cplx start = upper ? zeta : std::conj(zeta);
  if (collapsed_to_zero(u_) || u_.is_zero()) {
    return {0.0, 0.0, 0, GeodesicPath::vertical_ray(start, 1).describe()};
  }
  if (upper && !holo) {
    const double alpha = std::min(0.0, k / 2.0 + re_nu - 0.5);
    const auto path = GeodesicPath::vertical_ray(zeta, 1).with_exponents(alpha, 0.0);
    return to_eval(integrate_form(form_first(u_, zeta), path, opt_), path, -1.0);
  }
  double alpha;
  if (upper) {
    alpha = std::min(0.0, (k - 2.0) / 2.0 + re_nu - 0.5);
  } else if (holo) {
    alpha = std::min(0.0, 1.0 - k / 2.0 + re_nu - 0.5);
  } else {
    alpha = std::min(0.0, -k / 2.0 + re_nu - 0.5);
  }
  const auto path = GeodesicPath::vertical_ray(start, 1).with_exponents(alpha, 0.0);
  return to_eval(integrate_form(kernel_first(u_, zeta), path, opt_), path);
}

PeriodEvaluation NearlyPeriodicFunction::lower_via_conjugate(cplx zeta) const {
  if (!(zeta.imag() < 0.0)) throw DomainError("lower_via_conjugate needs Im zeta < 0");
  const double k = u_.weight();
  const double re_nu = u_.nu().real();
  if (std::abs(re_nu) >= 0.5) {
    throw UnsupportedParameter("nearly periodic function needs |Re nu| < 1/2");
  }
  const ConjugateForm ut(u_);
  const cplx nu = u_.nu();
  AnchoredFormField omega = [&ut, k, nu, zeta](const PathPoint& p) {
    const KernelOperand R(k, nu, zeta);
    return eta_form(-k, ut, R, p);
  };
  const double alpha = std::min(0.0, -k / 2.0 + re_nu - 0.5);
  const auto path = GeodesicPath::vertical_ray(zeta, -1).with_exponents(alpha, 0.0);
  return to_eval(integrate_form(omega, path, opt_), path);
}

PeriodEvaluation NearlyPeriodicFunction::integral_to(cplx zeta, ExtendedComplex end) const {
  if (!(zeta.imag() > 0.0)) throw DomainError("integral_to needs Im zeta > 0");
  const double k = u_.weight();
  const double re_nu = u_.nu().real();
  const double alpha = is_holomorphic(u_) ? std::min(0.0, (k - 2.0) / 2.0 + re_nu - 0.5)
                                          : std::min(0.0, -k / 2.0 + re_nu - 0.5);
  const auto path = GeodesicPath::geodesic(zeta, end).with_exponents(alpha, 0.0);
  if (collapsed_to_zero(u_)) return {0.0, 0.0, 0, path.describe()};
  return to_eval(integrate_form(kernel_first(u_, zeta), path, opt_), path);
}

PeriodFunction::PeriodFunction(MaassForm u, QuadratureOptions opt)
    : u_(std::move(u)), opt_(opt) {
  // The surrogate is not S-invariant, so only the Whittaker decay at small y
  // keeps the integral finite near 0.
  if (!is_holomorphic(u_) && std::abs(u_.nu().real()) >= 0.5) {
    throw UnsupportedParameter("period function of a surrogate needs |Re nu| < 1/2");
  }
}

GeodesicPath PeriodFunction::contour_for(cplx zeta) const {
  if (on_cut(zeta)) throw DomainError("period function is not defined on (-inf, 0]");
  if (zeta.real() > 0.0) return GeodesicPath::vertical_ray(0.0, 1);
  const double x = -zeta.real(), h = std::abs(zeta.imag());
  // Steep polyline 0 -> -eps + i eps -> i inf when zeta sits above its first leg.
  const double eps = std::max({0.25, std::abs(zeta) / 2.0, 1.25 * x});
  if (x < 0.8 * h) {
    return GeodesicPath::polyline({0.0, cplx(-eps, eps), ExtendedComplex::infinity()});
  }
  // Otherwise the path has to pass below zeta. Straight legs close to R meet
  // the form where it oscillates fastest, so run through the cusps -j/n along
  // semicircles of height 1/(2n) < h and leave from the last one vertically.
  const int n = static_cast<int>(std::ceil(1.0 / h));
  const int m = static_cast<int>(std::ceil(x * n + 0.5));
  std::vector<ExtendedComplex> v;
  for (int j = 0; j <= m; ++j) v.emplace_back(-static_cast<double>(j) / n);
  v.push_back(ExtendedComplex::infinity());
  return GeodesicPath::geodesic_chain(std::move(v));
}

PeriodEvaluation PeriodFunction::operator()(cplx zeta) const {
  return integral_along(zeta, contour_for(zeta));
}

PeriodEvaluation PeriodFunction::integral_along(cplx zeta, const GeodesicPath& path) const {
  return to_eval(integrate_form(kernel_first(u_, zeta), path, opt_), path);
}

PeriodEvaluation PeriodFunction::swapped(cplx zeta) const {
  const auto path = contour_for(zeta);
  return to_eval(integrate_form(form_first(u_, zeta), path, opt_), path, -1.0);
}

PeriodEvaluation eval_f(const NearlyPeriodicFunction& f, cplx zeta) { return f(zeta); }
PeriodEvaluation eval_P(const PeriodFunction& P, cplx zeta) { return P(zeta); }

BijectionConstants::BijectionConstants(double k, cplx nu) {
  const cplx ek = std::exp(kI * kPi * k);
  c_plus_ = 1.0 - ek * std::exp(kI * kPi * (2.0 * nu - 1.0));
  c_minus_ = 1.0 - ek * std::exp(-kI * kPi * (2.0 * nu - 1.0));
  if (std::abs(c_plus_) < 1e-12 || std::abs(c_minus_) < 1e-12) {
    std::ostringstream os;
    os << "f <-> P bijection degenerates at k = " << k << ", nu = " << nu;
    throw DegenerateBijection(os.str());
  }
}

cplx BijectionConstants::for_point(cplx zeta) const {
  require_off_axis(zeta);
  return zeta.imag() > 0.0 ? c_plus_ : c_minus_;
}

cplx f_to_P(const Evaluatable& f, const PeriodData& d, cplx zeta) {
  require_off_axis(zeta);
  return f(zeta) - dslash(f, d.nu, d.v, GroupElement::S())(zeta);
}

cplx P_to_cf(const Evaluatable& P, const PeriodData& d, cplx zeta) {
  require_off_axis(zeta);
  return P(zeta) + dslash(P, d.nu, d.v, GroupElement::S())(zeta);
}

cplx P_to_f(const Evaluatable& P, const PeriodData& d, cplx zeta) {
  const BijectionConstants c(d.k, d.nu);
  return P_to_cf(P, d, zeta) / c.for_point(zeta);
}

cplx three_term_residual(const Evaluatable& P, const PeriodData& d, cplx zeta) {
  return P(zeta) - dslash(P, d.nu, d.v, GroupElement::T())(zeta) -
         dslash(P, d.nu, d.v, GroupElement::T_prime())(zeta);
}

namespace {

std::vector<cplx> strip_constant(int k, const std::vector<cplx>& q) {
  if (k < 2 || k % 2 != 0) throw InvalidWeight("holomorphic cusp form needs even k >= 2");
  if (q.empty() || q[0] != cplx(0.0)) throw DomainError("q-expansion is not cuspidal (c_0 != 0)");
  return std::vector<cplx>(q.begin() + 1, q.end());
}

}  // namespace

HolomorphicCuspForm::HolomorphicCuspForm(int k, std::vector<cplx> q)
    : k_(k),
      coeffs_(std::move(q)),
      embedding_(MaassForm::holomorphic_embedding(k, (k - 1) / 2.0, strip_constant(k, coeffs_))) {}

cplx HolomorphicCuspForm::operator()(cplx z) const {
  return embedding_.value(z) / std::pow(z.imag(), k_ / 2.0);
}

HolomorphicCuspForm delta_cusp_form(std::size_t terms) {
  const auto tau = ramanujan_tau(terms);
  std::vector<cplx> q(terms + 1, 0.0);
  for (std::size_t n = 1; n <= terms; ++n) q[n] = static_cast<double>(tau[n - 1]);
  return HolomorphicCuspForm(12, q);
}

PeriodEvaluation eichler_polynomial(const HolomorphicCuspForm& uh, cplx zeta,
                                    const QuadratureOptions& opt) {
  const int m = uh.weight() - 2;
  const auto path = GeodesicPath::vertical_ray(kI, 1);
  auto r = integrate_dz(
      [&](cplx z) { return (std::pow(zeta - z, m) - std::pow(zeta * z + 1.0, m)) * uh(z); }, path,
      opt);
  return to_eval(r, path);
}

std::vector<cplx> eichler_coefficients(const HolomorphicCuspForm& uh, std::size_t n,
                                       const QuadratureOptions& opt) {
  const std::size_t deg = uh.weight() - 2;
  if (n < deg + 1) throw UnsupportedParameter("need at least k-1 samples");
  std::vector<cplx> samples(n);
  for (std::size_t j = 0; j < n; ++j) {
    samples[j] = eichler_polynomial(uh, std::polar(1.0, 2.0 * kPi * j / n), opt).value;
  }
  std::vector<cplx> c(deg + 1);
  for (std::size_t m = 0; m <= deg; ++m) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += samples[j] * std::polar(1.0, -2.0 * kPi * double(j * m % n) / n);
    c[m] = s / double(n);
  }
  return c;
}

PeriodEvaluation eichler_f(const HolomorphicCuspForm& uh, cplx zeta,
                           const QuadratureOptions& opt) {
  if (!(zeta.imag() > 0.0)) throw DomainError("eichler_f needs Im zeta > 0");
  const int m = uh.weight() - 2;
  const auto path = GeodesicPath::vertical_ray(zeta, 1);
  auto r = integrate_dz([&](cplx z) { return std::pow(zeta - z, m) * uh(z); }, path, opt);
  return to_eval(r, path);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return 0.0;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

GrowthReport growth_check(const PeriodFunction& P) {
  GrowthReport g;
  for (int j = 3; j <= 10; ++j) {
    g.small_points.push_back(std::ldexp(1.0, -j));
    g.large_points.push_back(std::ldexp(1.0, j));
  }
  for (double x : g.small_points) g.small_abs.push_back(std::abs(P(x).value));
  for (double x : g.large_points) g.large_abs.push_back(std::abs(P(x).value));
  g.slope_at_zero = loglog_slope(g.small_points, g.small_abs);
  g.slope_at_infinity = loglog_slope(g.large_points, g.large_abs);
  const double e = 2.0 * P.source().nu().real() - 1.0;
  g.bound_at_zero = std::min(0.0, e);
  g.bound_at_infinity = std::max(-1.0, e);
  g.pass_zero = g.slope_at_zero >= g.bound_at_zero - g.slack;
  g.pass_infinity = g.slope_at_infinity <= g.bound_at_infinity + g.slack;
  return g;
}

}  // namespace maass
