#include <random>

#include "doctest.h"
#include "maass/complex_branch.hpp"
#include "maass/errors.hpp"

using namespace maass;

TEST_CASE("principal_arg convention") {
  CHECK(principal_arg(1.0) == 0.0);
  CHECK(principal_arg(-1.0) == kPi);
  // a signed zero imaginary part does not move the cut value
  CHECK(principal_arg(cplx(-1.0, -0.0)) == kPi);
  CHECK(principal_arg(cplx(0.0, -1.0)) == doctest::Approx(-kPi / 2).epsilon(1e-15));
  CHECK_THROWS_AS(principal_arg(0.0), DomainError);
}

TEST_CASE("principal_pow examples") {
  CHECK(std::abs(principal_pow(-1.0, 0.5) - cplx(0, 1)) < 1e-15);
  CHECK(std::abs(principal_pow(cplx(0, 2), 0.5) - cplx(1, 1)) < 1e-15);
  CHECK(std::abs(principal_pow(std::exp(1.0), cplx(0, 1)) -
                 cplx(std::cos(1.0), std::sin(1.0))) < 1e-15);
  CHECK(principal_pow(0.0, 0.5) == cplx(0.0));
  CHECK_THROWS_AS(principal_pow(0.0, -0.5), DomainError);
  CHECK_THROWS_AS(principal_pow(0.0, 0.0), DomainError);
}

TEST_CASE("pow identities and conjugate argument") {
  std::mt19937_64 rng(0);
  std::uniform_real_distribution<double> U(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const cplx z(U(rng), U(rng));
    CHECK(std::abs(principal_pow(z, 1.0) - z) <= 1e-14 * std::abs(z));
    CHECK(std::abs(principal_pow(z, 0.0) - 1.0) <= 1e-15);
    if (!on_cut(z)) CHECK(principal_arg(std::conj(z)) == -principal_arg(z));
  }
}

TEST_CASE("cut membership is exact") {
  CHECK(on_cut(-2.0));
  CHECK(on_cut(0.0));
  CHECK_FALSE(on_cut(cplx(-2.0, 1e-300)));
  CHECK_THROWS_AS(CutPlanePoint(cplx(-3.0, 0.0)), DomainError);
  CHECK(CutPlanePoint(cplx(-3.0, -1e-300)).value().imag() < 0.0);
}

TEST_CASE("factorizable predicate") {
  CHECK(factorizable(2.0, cplx(0, 1)));
  CHECK(factorizable(cplx(0, 1), cplx(0, -1)));
  CHECK_FALSE(factorizable(-1.0, -1.0));
  CHECK(std::abs(principal_pow(1.0, 0.5) - principal_pow(-1.0, 0.5) * principal_pow(-1.0, 0.5)) > 1.9);
}

TEST_CASE("factorization holds whenever the predicate does") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  std::uniform_real_distribution<double> P(0.1, 4.0);
  auto alpha = [&] {
    for (;;) {
      cplx a(U(rng), U(rng));
      if (std::abs(a) <= 3.0) return a;
    }
  };
  int tested = 0;
  for (int i = 0; i < 200; ++i) {
    cplx z, w;
    if (i % 2 == 0) {
      z = P(rng);
      w = cplx(U(rng), U(rng));
    } else {
      z = cplx(U(rng), U(rng));
      w = P(rng) / z;  // product positive up to rounding
      const cplx prod = z * w;
      if (!is_positive_real(prod)) continue;
    }
    if (!factorizable(z, w)) continue;
    ++tested;
    for (int j = 0; j < 100; ++j) {
      const cplx a = alpha();
      const cplx lhs = principal_pow(z * w, a);
      const cplx rhs = principal_pow(z, a) * principal_pow(w, a);
      CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(lhs));
    }
  }
  CHECK(tested > 100);
}
