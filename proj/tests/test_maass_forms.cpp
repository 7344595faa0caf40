#include <cmath>
#include <random>

#include "doctest.h"
#include "maass/errors.hpp"
#include "maass/maass_forms.hpp"
#include "maass/special_functions.hpp"

using namespace maass;

namespace {

constexpr cplx kI(0.0, 1.0);

MaassForm surrogate(cplx nu = cplx(0, 0.35)) {
  std::vector<cplx> a;
  for (int n = 1; n <= 12; ++n) a.push_back(1.0 / n);
  return MaassForm::whittaker_surrogate(0.5, MultiplierSystem::eta_power(0.5), nu, a);
}

// y^6 Delta(z) straight from q prod (1 - q^n)^24, no coefficients involved.
cplx delta_product(cplx z) {
  const cplx q = std::exp(2.0 * kPi * kI * z);
  cplx p = 1.0, qn = q;
  for (int n = 1; n < 2000 && std::abs(qn) > 1e-300; ++n) {
    p *= 1.0 - qn;
    qn *= q;
  }
  return std::pow(z.imag(), 6.0) * q * std::pow(p, 24);
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("Ramanujan tau") {
  const auto tau = ramanujan_tau(12);
  const std::int64_t expected[] = {1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920};
  for (int i = 0; i < 10; ++i) CHECK(tau[i] == expected[i]);
  // multiplicativity: tau(2) tau(3) = tau(6), tau(p^2) = tau(p)^2 - p^11
  CHECK(tau[1] * tau[2] == tau[5]);
  CHECK(tau[3] == tau[1] * tau[1] - 2048);
}

TEST_CASE("Delta embedding values") {
  const MaassForm u = delta_embedding(5.5);
  const MaassForm u60 = delta_embedding(5.5, 60);
  CHECK(rel(u.value(kI), u60.value(kI)) < 1e-14);
  CHECK(rel(u.value(kI), delta_product(kI)) < 1e-12);
  CHECK(u.eigenvalue() == cplx(-30.0));
  for (cplx z : {cplx(0.3, 1.2), cplx(-0.41, 0.9), cplx(0.1, 2.5)}) {
    CHECK(rel(u.value(z), delta_product(z)) < 1e-12);
  }
  CHECK_THROWS_AS(u.value(cplx(0.2, -1.0)), DomainError);
  CHECK_THROWS_AS(MaassForm::holomorphic_embedding(12.0, 1.0, {1.0}), UnsupportedParameter);
}

TEST_CASE("modular reduction agrees with the plain expansion") {
  const MaassForm reduced = delta_embedding(5.5);
  const auto tau = ramanujan_tau(150);
  const MaassForm plain = MaassForm::holomorphic_embedding(
      12.0, 5.5, std::vector<cplx>(tau.begin(), tau.end()), false);
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> X(-2.0, 2.0), Y(0.2, 1.5);
  for (int i = 0; i < 40; ++i) {
    const cplx z(X(rng), Y(rng));
    const FormSample a = reduced.sample(12.0, z), b = plain.sample(12.0, z);
    const double scale = std::abs(b.value) + 1e-3 * std::pow(z.imag(), 6.0);
    CHECK(std::abs(a.value - b.value) <= 1e-10 * scale);
    CHECK(std::abs(a.raise - b.raise) <= 1e-9 * (std::abs(b.raise) + 1e-3));
  }
}

TEST_CASE("equivariance of the Delta embedding") {
  const auto tau = ramanujan_tau(150);
  const MaassForm u = MaassForm::holomorphic_embedding(
      12.0, 5.5, std::vector<cplx>(tau.begin(), tau.end()), false);
  const auto v = MultiplierSystem::trivial(12.0);
  const GroupElement gs[] = {GroupElement::S(), GroupElement::T(), GroupElement::T_prime(),
                             GroupElement::T_inverse() * GroupElement::S()};
  for (const GroupElement& g : gs) {
    for (cplx z : {cplx(0.3, 1.2), cplx(-0.2, 0.8)}) {
      const cplx lhs = u.value(moebius(g, z));
      const cplx rhs = v.evaluate(g) * std::polar(1.0, 12.0 * principal_arg(mu(g, z))) * u.value(z);
      CHECK(std::abs(lhs - rhs) <= 1e-11 * std::abs(rhs));
    }
  }
}

TEST_CASE("T-equivariance") {
  const cplx z(0.3, 1.2);
  const MaassForm d = delta_embedding(5.5);
  CHECK(std::abs(d.value(z + 1.0) - d.value(z)) <= 1e-12 * std::abs(d.value(z)));
  const MaassForm s = surrogate();
  const cplx vT = s.multiplier().v_T();
  CHECK(std::abs(s.value(z + 1.0) - vT * s.value(z)) <= 1e-12 * std::abs(s.value(z)));
  CHECK(std::abs(s.value(z - 1.0) - s.value(z) / vT) <= 1e-12 * std::abs(s.value(z)));
  // (-1) acts trivially on H and v(-1) e^{ik pi} = 1
  const auto v = s.multiplier();
  CHECK(std::abs(v.evaluate(GroupElement::minus_identity()) *
                 std::polar(1.0, 0.5 * principal_arg(mu(GroupElement::minus_identity(), z))) -
                 1.0) < 1e-13);
}

TEST_CASE("single-term surrogate") {
  const auto v = MultiplierSystem::eta_power(0.5);
  const MaassForm u = MaassForm::whittaker_surrogate(0.5, v, cplx(0, 0.4), {1.0});
  CHECK(std::abs(u.kappa0() - 1.0 / 24.0) < 1e-15);
  CHECK(std::abs(std::polar(1.0, 2 * kPi * u.kappa0()) - v.v_T()) < 1e-15);
  const cplx z(0.17, 0.6);
  const double m = 1.0 + 1.0 / 24.0;
  const cplx expected = whittaker_w({0.25, cplx(0, 0.4)}, 4 * kPi * m * z.imag()) *
                        std::exp(2.0 * kPi * kI * m * z.real());
  CHECK(std::abs(u.value(z) - expected) < 1e-15 * std::abs(expected) + 1e-300);
  CHECK(u.truncation() == 1);
}

TEST_CASE("conjugate extension") {
  const MaassForm u = delta_embedding(5.5);
  const ConjugateForm uc(u);
  CHECK(uc.value(-kI) == u.value(kI));
  CHECK_THROWS_AS(uc.value(kI), DomainError);
  // slash by T with weight -k and trivial multiplier
  SampledFunction f = [&](cplx z) { return uc.value(z); };
  const auto s = slash(f, -12.0, MultiplierSystem::trivial(12.0), GroupElement::T());
  const cplx z(1.0, -2.0);
  CHECK(std::abs(s(z) - f(z)) <= 1e-12 * std::abs(f(z)));
  const cplx w(0.5, -1.5);
  CHECK(std::abs(laplacian(f, -12.0, w) - u.eigenvalue() * f(w)) <= 1e-5 * std::abs(f(w)));
  // operator exchange under conjugation
  const FormSample a = uc.sample(-12.0, w);
  CHECK(std::abs(a.lower - maass_lower(f, -12.0, w)) <= 1e-6 * std::abs(a.lower));
  CHECK(std::abs(a.raise - maass_raise(f, -12.0, w)) <= 1e-6 * std::abs(a.lower));
}

TEST_CASE("Maass operators on the Delta embedding") {
  const MaassForm u = delta_embedding(5.5);
  SampledFunction f = [&](cplx z) { return u.value(z); };
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> X(-1.0, 1.0), Y(0.5, 2.0);
  for (int i = 0; i < 20; ++i) {
    const cplx z(X(rng), Y(rng));
    const FormSample s = u.sample(12.0, z);
    CHECK(std::abs(s.lower) <= 1e-10);
    CHECK(std::abs(maass_lower(f, 12.0, z)) <= 1e-6 * std::abs(s.raise));
    CHECK(std::abs(maass_raise(f, 12.0, z) - s.raise) <= 1e-6 * std::abs(s.raise));
  }
}

TEST_CASE("eigen-relation of h^{1/2 - nu}") {
  const double k = 0.5, nu = 0.3;
  SampledFunction h = [&](cplx z) { return std::pow(z.imag(), 0.5 - nu); };
  const cplx z = kI;
  CHECK(std::abs(maass_raise(h, k, z) - (1 - 2 * nu + k) * h(z)) <= 1e-6 * std::abs(h(z)));
  CHECK(std::abs(maass_lower(h, k, z) - (1 - 2 * nu - k) * h(z)) <= 1e-6 * std::abs(h(z)));
}

TEST_CASE("surrogate operators and Laplacian") {
  const MaassForm u = surrogate();
  const double k = u.weight();
  SampledFunction f = [&](cplx z) { return u.value(z); };
  const cplx z(0.2, 0.9);
  const FormSample s = u.sample(k, z);
  CHECK(std::abs(maass_raise(f, k, z) - s.raise) <= 1e-6 * std::abs(s.raise));
  CHECK(std::abs(maass_lower(f, k, z) - s.lower) <= 1e-6 * std::abs(s.lower));
  // E^+_{k-2} E^-_k = -4 Delta_k - k(k-2),  E^-_{k+2} E^+_k = -4 Delta_k - k(k+2)
  SampledFunction lower = [&](cplx t) { return u.sample(k, t).lower; };
  SampledFunction raise = [&](cplx t) { return u.sample(k, t).raise; };
  const cplx lap = laplacian(f, k, z);
  const cplx rhs_m = -4.0 * lap - k * (k - 2) * s.value;
  const cplx rhs_p = -4.0 * lap - k * (k + 2) * s.value;
  CHECK(std::abs(maass_raise(lower, k - 2, z) - rhs_m) <= 1e-4 * std::abs(rhs_m));
  CHECK(std::abs(maass_lower(raise, k + 2, z) - rhs_p) <= 1e-4 * std::abs(rhs_p));
}

TEST_CASE("Laplace eigen-equation at interior points") {
  const MaassForm d = delta_embedding(5.5), s = surrogate();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> X(-1.0, 1.0), Y(0.3, 2.0);
  for (const MaassForm* u : {&d, &s}) {
    SampledFunction f = [u](cplx z) { return u->value(z); };
    for (int i = 0; i < 20; ++i) {
      const cplx z(X(rng), Y(rng));
      const cplx val = f(z);
      CHECK(std::abs(laplacian(f, u->weight(), z) - u->eigenvalue() * val) <=
            1e-5 * std::max(std::abs(val), 1e-30));
    }
  }
}

TEST_CASE("termwise Whittaker solutions for both signs of the weight") {
  for (double k : {0.5, -0.5}) {
    const cplx nu(0, 0.35);
    SampledFunction un = [&](cplx z) {
      return whittaker_w({k / 2, nu}, 4 * kPi * z.imag()) * std::exp(2.0 * kPi * kI * z.real());
    };
    for (cplx z : {cplx(0.1, 0.4), cplx(0.3, 1.3)}) {
      CHECK(std::abs(laplacian(un, k, z) - (0.25 - nu * nu) * un(z)) <= 1e-5 * std::abs(un(z)));
    }
  }
}

TEST_CASE("cusp decay") {
  const MaassForm s = surrogate();
  const MaassForm d = delta_embedding(5.5);
  const double x = 0.23;
  // exponential rate of the leading term
  const double y1 = 4.0, y2 = 8.0;
  const double rate =
      std::log(std::abs(s.value(cplx(x, y2))) / std::abs(s.value(cplx(x, y1)))) / (y2 - y1);
  CHECK(rate == doctest::Approx(-2 * kPi * (1 + 1.0 / 24)).epsilon(0.02));
  // faster than any power on a log grid: y^M |u| eventually decreasing
  for (const MaassForm* u : {&s, &d}) {
    double prev = 1e300;
    for (double y = 2.0; y <= 64.0; y *= 2.0) {
      const double w = std::pow(y, 10.0) * std::abs(u->value(cplx(x, y)));
      if (y >= 4.0) CHECK(w < prev);
      prev = w;
    }
  }
  CHECK(d.truncation_bound(1.0) < 1e-120);
}

TEST_CASE("slash and double slash") {
  const auto v = MultiplierSystem::eta_power(0.5);
  SampledFunction f = [](cplx z) { return std::exp(cplx(0, 1.3) * z) + z * z; };
  const auto id = slash(f, 0.5, v, GroupElement::identity());
  CHECK(id(cplx(0.2, 0.7)) == f(cplx(0.2, 0.7)));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> X(-1.0, 1.0), Y(0.3, 2.0);
  const GroupElement g = GroupElement::S() * GroupElement::T();
  const GroupElement h = GroupElement::T_prime() * GroupElement::S();
  const auto lhs = slash(f, 0.5, v, g * h);
  const auto rhs = slash(slash(f, 0.5, v, g), 0.5, v, h);
  for (int i = 0; i < 10; ++i) {
    const cplx z(X(rng), Y(rng));
    CHECK(std::abs(lhs(z) - rhs(z)) <= 1e-12 * std::abs(lhs(z)));
  }
  const cplx nu(0.1, 0.2);
  SampledFunction id_fn = [](cplx z) { return z; };
  const auto ds = dslash(id_fn, nu, v, GroupElement::T());
  const cplx zeta(0.4, 0.3);
  CHECK(std::abs(ds(zeta) - (zeta + 1.0) / v.v_T()) < 1e-15);
  CHECK_NOTHROW(dslash(id_fn, nu, v, GroupElement::T_prime())(2.0));
  CHECK_THROWS_AS(dslash(id_fn, nu, v, GroupElement(1, 0, -1, 1))(2.0), BranchViolation);
}
