#include <cmath>

#include "doctest.h"
#include "maass/errors.hpp"
#include "maass/quadrature.hpp"

using namespace maass;

namespace {

constexpr cplx kI(0.0, 1.0);

FormField closed_delta_form(cplx zeta) {
  static const MaassForm delta = delta_embedding(cplx(5.5, 0.0));
  return [zeta](cplx z) {
    KernelOperand R(-12.0, cplx(5.5, 0.0), zeta);
    return eta_form(-12.0, R, delta, z);
  };
}

QuadratureOptions tol(double rel) {
  QuadratureOptions o;
  o.rel_tol = rel;
  return o;
}

}  // namespace

TEST_CASE("closed-form integrals") {
  auto r1 = integrate_form([](cplx z) { return OneFormSample{1.0 / z.imag(), 0.0, z}; },
                           GeodesicPath::geodesic(kI, 2.0 * kI), 1e-12);
  CHECK(std::abs(r1.value - kI * std::log(2.0)) < 1e-12);
  CHECK(r1.abs_error_estimate >= 0.0);

  auto r2 = integrate_dz([](cplx z) { return std::exp(2.0 * kPi * kI * z); },
                         GeodesicPath::vertical_ray(kI, 1), tol(1e-12));
  const cplx expect2 = kI * std::exp(-2.0 * kPi) / (2.0 * kPi);
  CHECK(std::abs(r2.value - expect2) < 1e-12 * std::abs(expect2));
  CHECK(r2.cusp_height >= 12.0);

  // Same ray in the lower half-plane.
  auto r3 = integrate_dz([](cplx z) { return std::exp(-2.0 * kPi * kI * z); },
                         GeodesicPath::vertical_ray(-kI, -1), tol(1e-12));
  CHECK(std::abs(r3.value + expect2) < 1e-12 * std::abs(expect2));

  // Semicircle between two cusps: the integral of dz is the chord.
  auto r4 = integrate_dz([](cplx) { return cplx(1.0); }, GeodesicPath::geodesic(-1.0, 0.0),
                         tol(1e-12));
  CHECK(std::abs(r4.value - 1.0) < 1e-11);
  // z dz on the same arc gives (0 - 1)/2.
  auto r5 = integrate_dz([](cplx z) { return z; }, GeodesicPath::geodesic(-1.0, 0.0), tol(1e-12));
  CHECK(std::abs(r5.value + 0.5) < 1e-11);
  // Arc between interior points: antiderivative z^3/3.
  const cplx a(0.3, 0.9), b(1.7, 0.4);
  auto r6 = integrate_dz([](cplx z) { return z * z; }, GeodesicPath::geodesic(a, b), tol(1e-12));
  CHECK(std::abs(r6.value - (b * b * b - a * a * a) / 3.0) < 1e-11);
  // Arc in H^-.
  auto r7 = integrate_dz([](cplx z) { return z * z; },
                         GeodesicPath::geodesic(std::conj(a), std::conj(b), -1), tol(1e-12));
  CHECK(std::abs(r7.value - std::conj(r6.value)) < 1e-11);
}

TEST_CASE("arcs follow the hyperbolic geodesic") {
  auto p = GeodesicPath::geodesic(cplx(0.3, 0.9), cplx(1.7, 0.4));
  const double c = p.center(), r = p.radius();
  CHECK(std::abs(std::abs(cplx(0.3, 0.9) - c) - r) < 1e-14);
  CHECK(std::abs(std::abs(cplx(1.7, 0.4) - c) - r) < 1e-14);
  // The integral of |z - c|^2 dz over the arc is r^2 times the chord.
  auto res = integrate_dz([c](cplx z) { return cplx(std::norm(z - c)); }, p, tol(1e-12));
  CHECK(std::abs(res.value - r * r * (cplx(1.7, 0.4) - cplx(0.3, 0.9))) < 1e-11);
}

TEST_CASE("endpoint singularities") {
  for (double alpha : {-0.4, -0.2, 0.0}) {
    CAPTURE(alpha);
    auto g = [alpha](cplx z) { return principal_pow(z - kI, alpha); };
    auto vert = GeodesicPath::geodesic(kI, 2.0 * kI).with_exponents(alpha, 0.0);
    auto r = integrate_dz(g, vert, tol(1e-11));
    const cplx exact = principal_pow(kI, alpha + 1.0) / (alpha + 1.0);
    CHECK(std::abs(r.value - exact) < 1e-9);

    auto arc = GeodesicPath::geodesic(kI, 1.0).with_exponents(alpha, 0.0);
    auto ra = integrate_dz(g, arc, tol(1e-11));
    const cplx exact_arc = principal_pow(cplx(1.0, -1.0), alpha + 1.0) / (alpha + 1.0);
    CHECK(std::abs(ra.value - exact_arc) < 1e-9);

    // Singularity at the far end.
    auto rev = integrate_dz(g, vert.reversed(), tol(1e-11));
    CHECK(std::abs(rev.value + exact) < 1e-9);
  }
  CHECK_THROWS_AS(integrate_dz([](cplx z) { return 1.0 / (z - kI); },
                               GeodesicPath::geodesic(kI, 2.0 * kI).with_exponents(-1.0, 0.0)),
                  DivergentIntegral);
}

TEST_CASE("budget exhaustion reports the partial value") {
  QuadratureOptions o;
  o.rel_tol = 1e-14;
  o.max_evals = 100;
  try {
    integrate_dz([](cplx z) { return std::exp(40.0 * kI * z); }, GeodesicPath::geodesic(kI, 1.0 + 3.0 * kI), o);
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(std::isfinite(e.error_estimate()));
  }
}

TEST_CASE("geodesic images") {
  auto ray = GeodesicPath::vertical_ray(0.0, 1);
  auto s = geodesic_image(ray, GroupElement::S().inverse());
  CHECK(s.from().is_infinite());
  CHECK(s.to() == ExtendedComplex(0.0));

  auto t = geodesic_image(ray, GroupElement::T_inverse());
  CHECK(t.kind() == GeodesicPath::Kind::vertical_ray);
  CHECK(t.from() == ExtendedComplex(-1.0));
  CHECK(t.to().is_infinite());

  auto a = geodesic_image(ray, GroupElement::T_prime().inverse());
  CHECK(a.kind() == GeodesicPath::Kind::arc);
  CHECK(a.from() == ExtendedComplex(0.0));
  CHECK(a.to() == ExtendedComplex(-1.0));
  CHECK(a.center() == doctest::Approx(-0.5));
  CHECK(a.radius() == doctest::Approx(0.5));

  CHECK_THROWS_AS(geodesic_image(GeodesicPath::polyline({kI, 1.0 + kI}), GroupElement::S()),
                  UnsupportedParameter);
}

TEST_CASE("closed Maass-Selberg form: path independence and loops") {
  const auto omega = closed_delta_form(3.0);
  const auto opt = tol(1e-11);

  auto ray = integrate_form(omega, GeodesicPath::vertical_ray(0.0, 1), opt);
  auto poly = integrate_form(
      omega,
      GeodesicPath::polyline({0.0, cplx(-0.5, 0.5), cplx(-0.5, 2.0), ExtendedComplex::infinity()}),
      opt);
  CHECK(std::abs(ray.value) > 1e-6);
  CHECK(std::abs(ray.value - poly.value) < 1e-8 * std::abs(ray.value));

  // Three-path split around the triangle 0, -1, infinity.
  auto left = integrate_form(omega, GeodesicPath::geodesic(-1.0, ExtendedComplex::infinity()), opt);
  auto arc = integrate_form(omega, GeodesicPath::geodesic(0.0, -1.0), opt);
  CHECK(std::abs(ray.value - left.value - arc.value) < 1e-8 * std::abs(ray.value));

  // Closed rectangle.
  auto loop = integrate_form(omega,
                             GeodesicPath::polyline({cplx(0.2, 0.8), cplx(0.6, 0.8), cplx(0.6, 1.6),
                                                     cplx(0.2, 1.6), cplx(0.2, 0.8)}),
                             opt);
  auto side = integrate_form(omega, GeodesicPath::polyline({cplx(0.2, 0.8), cplx(0.6, 0.8)}), opt);
  CHECK(std::abs(loop.value) < 1e-8 * std::abs(side.value));
}

TEST_CASE("halving the tolerance stays within the error estimate") {
  const auto omega = closed_delta_form(3.0);
  auto path = GeodesicPath::vertical_ray(0.0, 1);
  double t = 1e-6;
  auto prev = integrate_form(omega, path, t);
  for (int i = 0; i < 4; ++i) {
    t /= 2.0;
    auto next = integrate_form(omega, path, t);
    CHECK(std::abs(next.value - prev.value) <= prev.abs_error_estimate + 1e-15);
    prev = next;
  }
}
