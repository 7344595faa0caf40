#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace maass {

/// Argument outside the mathematical domain of an operation (z = 0 for arg,
/// a point on a branch cut, Im z of the wrong sign, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Matrix with determinant different from 1.
class InvalidElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Weight that is not a half-integer, or incompatible with a multiplier kind.
class InvalidWeight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter combination outside the supported region of a special function
/// or transform.
class UnsupportedParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (z, zeta) pair for which zeta - z or zeta - conj(z) lies on (-inf, 0].
class RDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A stated hypothesis of a transformation law does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Double-slash evaluated at a real point with a matrix that does not keep
/// the automorphy factor off the cut.
class BranchViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Hypothesis e^{-+ pi i (2nu-1)} != e^{pi i k} of the f <-> P bijection fails.
class DegenerateBijection : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Endpoint singularity exponent <= -1.
class DivergentIntegral : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature hit its evaluation budget before reaching the
/// requested tolerance.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, std::complex<double> partial,
                 double error_estimate)
      : std::runtime_error(what), partial_(partial), error_(error_estimate) {}

  std::complex<double> partial_value() const { return partial_; }
  double error_estimate() const { return error_; }

 private:
  std::complex<double> partial_;
  double error_;
};

}  // namespace maass
