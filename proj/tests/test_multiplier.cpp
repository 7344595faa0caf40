#include <cmath>
#include <numeric>
#include <random>
#include <tuple>

#include "doctest.h"
#include "maass/errors.hpp"
#include "maass/multiplier.hpp"

using namespace maass;

namespace {

// y^{k/2} eta(z)^{2k} from the q-product; 2k is an integer so the power is
// unambiguous.
cplx eta_form(double k, cplx z) {
  const cplx q = std::exp(cplx(0, 2 * kPi) * z);
  cplx log_eta = cplx(0, 2 * kPi) * z / 24.0;
  cplx qn = q;
  for (int n = 1; n < 4000 && std::abs(qn) > 1e-20; ++n) {
    log_eta += std::log(1.0 - qn);
    qn *= q;
  }
  return std::pow(z.imag(), k / 2) * std::exp(2.0 * k * log_eta);
}

// v(g) read off from f(gz) = v(g) e^{ik arg mu(g,z)} f(z).
cplx oracle_multiplier(double k, const GroupElement& g, cplx z) {
  return eta_form(k, moebius(g, z)) / eta_form(k, z) *
         std::polar(1.0, -k * principal_arg(mu(g, z)));
}

GroupElement random_element(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> E(-bound, bound);
  for (;;) {
    const std::int64_t a = E(rng), c = E(rng);
    if (std::gcd(a, c) != 1) continue;
    // extended Euclid for d, -b with a d - b c = 1
    std::int64_t r0 = a, r1 = c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
      std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
      std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
    }
    // a s0 + c t0 = r0 = +-1
    std::int64_t d = s0 * r0, b = -t0 * r0;
    // shift to keep entries small: (b, d) -> (b + m a, d + m c)
    if (a != 0 || c != 0) {
      const double m = -std::round((a * static_cast<double>(b) + c * static_cast<double>(d)) /
                                   static_cast<double>(a * a + c * c));
      b += static_cast<std::int64_t>(m) * a;
      d += static_cast<std::int64_t>(m) * c;
    }
    if (std::llabs(b) > bound || std::llabs(d) > bound) continue;
    return GroupElement(a, b, c, d);
  }
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(MultiplierSystem::eta_power(0.3), InvalidWeight);
  CHECK_THROWS_AS(MultiplierSystem::trivial(0.5), InvalidWeight);
  CHECK_THROWS_AS(MultiplierSystem::trivial(3.0), InvalidWeight);
  const auto v12 = MultiplierSystem::eta_power(12.0);
  CHECK(std::abs(v12.v_T() - 1.0) < 1e-14);
  CHECK(std::abs(v12.v_S() - 1.0) < 1e-14);
}

TEST_CASE("parse_weight") {
  CHECK(parse_weight("1/2") == 0.5);
  CHECK(parse_weight("-3/2") == -1.5);
  CHECK(parse_weight("12") == 12.0);
  CHECK_THROWS_AS(parse_weight("1/3"), InvalidWeight);
  CHECK_THROWS_AS(parse_weight("abc"), InvalidWeight);
}

TEST_CASE("trivial system is identically one") {
  const auto v = MultiplierSystem::trivial(12.0);
  std::mt19937_64 rng(0);
  for (int i = 0; i < 50; ++i) CHECK(std::abs(v.evaluate(random_element(rng, 30)) - 1.0) < 1e-12);
}

TEST_CASE("eta-power generator values against the q-product") {
  const auto v = MultiplierSystem::eta_power(0.5);
  const cplx z0(0, 2);
  const cplx vT = oracle_multiplier(0.5, GroupElement::T(), z0);
  const cplx vS = oracle_multiplier(0.5, GroupElement::S(), z0);
  CHECK(std::abs(vT - std::polar(1.0, kPi / 12)) < 1e-12);
  CHECK(std::abs(vS - std::polar(1.0, -kPi / 4)) < 1e-12);
  CHECK(std::abs(v.evaluate(GroupElement::T()) - vT) < 1e-12);
  CHECK(std::abs(v.evaluate(GroupElement::S()) - vS) < 1e-12);
}

TEST_CASE("eta-power values on random elements match the q-product") {
  std::mt19937_64 rng(5);
  for (double k : {0.5, 1.5, 2.5}) {
    const auto v = MultiplierSystem::eta_power(k);
    for (int i = 0; i < 40; ++i) {
      const GroupElement g = random_element(rng, 7);
      // start point with gz not too close to the real axis
      const cplx z = GroupElement::identity() == g ? cplx(0.1, 1.0)
                                                   : moebius(g.inverse(), cplx(0.13, 1.1));
      if (z.imag() < 0.02) continue;
      CHECK(std::abs(v.evaluate(g) - oracle_multiplier(k, g, z)) < 1e-9);
    }
  }
}

TEST_CASE("v(-1) and v(S)^2 equal e^{-ik pi}") {
  for (double k : {0.5, 1.5, 12.0}) {
    const auto v = MultiplierSystem::eta_power(k);
    const cplx expected = std::polar(1.0, -k * kPi);
    CHECK(std::abs(v.evaluate(GroupElement::minus_identity()) - expected) <= 1e-13);
    CHECK(std::abs(v.v_S() * v.v_S() - expected) <= 1e-13);
  }
  const auto v = MultiplierSystem::eta_power(0.5);
  GeneratorWord ss{{Generator::S, Generator::S}};
  CHECK(std::abs(v.evaluate_word(ss, cplx(0, 2)) - std::polar(1.0, -kPi / 2)) < 1e-13);
}

TEST_CASE("consistency relation on random pairs") {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> X(-2.0, 2.0), Y(0.1, 3.0);
  for (double k : {0.5, 1.5, 12.0}) {
    const auto v = MultiplierSystem::eta_power(k);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      const GroupElement g = random_element(rng, 50), h = random_element(rng, 50);
      worst = std::max(worst, v.consistency_residual(g, h, cplx(X(rng), Y(rng))));
    }
    CHECK(worst <= 1e-11);
  }
}

TEST_CASE("word and base point independence") {
  const auto v = MultiplierSystem::eta_power(0.5);
  GeneratorWord tst{{Generator::T, Generator::S, Generator::T}};
  GeneratorWord stst{{Generator::S, Generator::T, Generator::S, Generator::T}};
  GeneratorWord tinv_s{{Generator::T_inverse, Generator::S}};
  // S^2 = (ST)^3
  GeneratorWord st3{{Generator::S, Generator::T, Generator::S, Generator::T,
                     Generator::S, Generator::T}};
  for (cplx base : {cplx(0, 2), cplx(0.4, 0.7), cplx(-3.0, 0.2)}) {
    CHECK(std::abs(v.evaluate_word(tst, base) - v.evaluate(GroupElement::T_prime())) < 1e-12);
    CHECK(std::abs(v.evaluate_word(stst, base) - v.evaluate_word(tinv_s, base)) < 1e-12);
    CHECK(std::abs(v.evaluate_word(st3, base) - v.evaluate(GroupElement::minus_identity())) < 1e-12);
  }
}
