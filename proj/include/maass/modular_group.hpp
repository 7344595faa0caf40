#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "maass/complex_branch.hpp"

namespace maass {

/// Point of the extended plane C u {inf}. Infinity is a distinguished value,
/// never a large float.
class ExtendedComplex {
 public:
  ExtendedComplex() = default;
  ExtendedComplex(cplx v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ExtendedComplex(double x) : value_(x, 0.0) {}  // NOLINT

  static ExtendedComplex infinity() {
    ExtendedComplex e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  /// Finite value; throws DomainError at infinity.
  cplx value() const;

  bool operator==(const ExtendedComplex& other) const;

 private:
  cplx value_{};
  bool infinite_ = false;
};

/// Element of SL2(Z): integer matrix [[a, b], [c, d]] with ad - bc = 1.
class GroupElement {
 public:
  /// Throws InvalidElement unless ad - bc == 1.
  GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static GroupElement identity() { return {1, 0, 0, 1}; }
  static GroupElement minus_identity() { return {-1, 0, 0, -1}; }
  static GroupElement S() { return {0, -1, 1, 0}; }
  static GroupElement T() { return {1, 1, 0, 1}; }
  static GroupElement T_inverse() { return {1, -1, 0, 1}; }
  /// T' = TST = [[1, 0], [1, 1]].
  static GroupElement T_prime() { return {1, 0, 1, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  std::array<std::int64_t, 4> entries() const { return {a_, b_, c_, d_}; }

  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;
  GroupElement operator-() const;
  bool operator==(const GroupElement& other) const = default;

  /// All entries >= 0 (the monoid that maps C' into itself).
  bool has_nonnegative_entries() const;

  /// Largest absolute entry.
  std::int64_t max_abs_entry() const;

  std::string to_string() const;

 private:
  std::int64_t a_, b_, c_, d_;
};

/// Fractional linear action on the extended plane.
ExtendedComplex moebius(const GroupElement& g, const ExtendedComplex& z);
/// Finite-point convenience overload; throws DomainError if g z = inf.
cplx moebius(const GroupElement& g, cplx z);

/// Automorphy denominator mu(g, z) = cz + d.
cplx mu(const GroupElement& g, cplx z);

enum class Generator { S, T, T_inverse };

/// Product of generator letters. The empty word is the identity.
struct GeneratorWord {
  std::vector<Generator> letters;

  GroupElement product() const;
  /// Number of maximal runs of equal letters.
  std::size_t syllable_count() const;
  std::string to_string() const;
};

struct Decomposition {
  GeneratorWord word;
  int sign = 1;  ///< product(word) * sign == element
};

/// Continued-fraction reduction of the first column into a word in S, T, T^-1.
/// A leftover -1 is written as the prefix S S, so `sign` is always +1.
Decomposition decompose(const GroupElement& g);

}  // namespace maass
