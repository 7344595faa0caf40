#include <cmath>
#include <random>

#include "doctest.h"
#include "maass/errors.hpp"
#include "maass/modular_group.hpp"

using namespace maass;

namespace {

GroupElement random_word_element(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 2);
  GroupElement g = GroupElement::identity();
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    switch (letter(rng)) {
      case 0: g = g * GroupElement::S(); break;
      case 1: g = g * GroupElement::T(); break;
      default: g = g * GroupElement::T_inverse(); break;
    }
  }
  return g;
}

}  // namespace

TEST_CASE("construction checks the determinant") {
  CHECK_THROWS_AS(GroupElement(1, 1, 1, 1), InvalidElement);
  CHECK_NOTHROW(GroupElement(2, 1, 1, 1));
}

TEST_CASE("generator relations") {
  const auto S = GroupElement::S(), T = GroupElement::T();
  CHECK(S * S == GroupElement::minus_identity());
  CHECK((S * T) * (S * T) * (S * T) == GroupElement::minus_identity());
  CHECK(T * S * T == GroupElement::T_prime());
  CHECK(S * T * S * T == GroupElement::T_inverse() * S);
}

TEST_CASE("moebius examples") {
  CHECK(std::abs(moebius(GroupElement::S(), cplx(0, 1)) - cplx(0, 1)) < 1e-15);
  CHECK(moebius(GroupElement::T(), cplx(3, 4)) == cplx(4, 4));
  const auto at_inf = moebius(GroupElement::S(), ExtendedComplex::infinity());
  CHECK_FALSE(at_inf.is_infinite());
  CHECK(at_inf.value() == cplx(0.0));
  CHECK(moebius(GroupElement::S(), ExtendedComplex(0.0)).is_infinite());
  CHECK(moebius(GroupElement::T(), ExtendedComplex::infinity()).is_infinite());
}

TEST_CASE("mu and the cocycle") {
  CHECK(mu(GroupElement::T(), cplx(0.3, 7.0)) == cplx(1.0));
  CHECK(mu(GroupElement::S(), cplx(0, 2)) == cplx(0, 2));
  const auto S = GroupElement::S(), T = GroupElement::T();
  const cplx z(0, 1);
  const cplx lhs = mu(S * T, z);
  CHECK(std::abs(lhs - mu(S, moebius(T, z)) * mu(T, z)) < 1e-15);
  CHECK(std::abs(lhs - cplx(1, 1)) < 1e-15);
}

TEST_CASE("decompose examples") {
  auto d = decompose(GroupElement::T_prime());
  CHECK(d.sign == 1);
  CHECK(d.word.to_string() == "[T,S,T]");
  d = decompose(GroupElement::minus_identity());
  CHECK(d.word.to_string() == "[S,S]");
  CHECK(d.sign == 1);
  // T^-1 S: the continued fraction gives [T^-1,S]; [S,T,S,T] is another word
  // for the same element.
  const GroupElement g = GroupElement::T_inverse() * GroupElement::S();
  d = decompose(g);
  CHECK(d.word.product() == g);
  GeneratorWord alt{{Generator::S, Generator::T, Generator::S, Generator::T}};
  CHECK(alt.product() == g);
  CHECK(decompose(GroupElement::identity()).word.letters.empty());
  CHECK_THROWS_AS(decompose(GroupElement(3, 1, 2, 2)), InvalidElement);
}

TEST_CASE("decompose inverts multiplication on random words") {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 1000; ++i) {
    const GroupElement g = random_word_element(rng, 20);
    const Decomposition d = decompose(g);
    REQUIRE(d.sign == 1);
    CHECK(d.word.product() == g);
    // Length bound, counted in syllables S^e, T^n: a T-power run counts once.
    const double m = static_cast<double>(std::max<std::int64_t>(1, g.max_abs_entry()));
    CHECK(d.word.syllable_count() <= 6.0 * (1.0 + std::log2(m)));
  }
}

TEST_CASE("imaginary part and difference of images on random elements") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> X(-3.0, 3.0), Y(0.05, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const GroupElement g = random_word_element(rng, 12);
    const cplx z(X(rng), Y(rng)), w(X(rng), Y(rng));
    const cplx gz = moebius(g, z), gw = moebius(g, w);
    const double im = z.imag() / std::norm(mu(g, z));
    CHECK(std::abs(gz.imag() - im) <= 1e-12 * im);
    const cplx rhs = (w - z) / (mu(g, w) * mu(g, z));
    CHECK(std::abs((gw - gz) - rhs) <= 1e-12 * std::max(std::abs(rhs), std::abs(gw) + std::abs(gz)));
  }
}

TEST_CASE("nonnegative matrices preserve the cut plane") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, 1);
  std::uniform_real_distribution<double> U(-4.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    GroupElement g = GroupElement::identity();
    for (int j = 0; j < 6; ++j) g = g * (pick(rng) ? GroupElement::T() : GroupElement::T_prime());
    REQUIRE(g.has_nonnegative_entries());
    for (int j = 0; j < 100; ++j) {
      cplx z(U(rng), U(rng));
      if (j % 10 == 0) z = cplx(std::abs(z.real()), 0.0);
      if (on_cut(z)) continue;
      CHECK_FALSE(on_cut(moebius(g, z)));
    }
  }
  CHECK_FALSE(GroupElement::S().has_nonnegative_entries());
}
