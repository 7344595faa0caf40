#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maass/complex_branch.hpp"
#include "maass/modular_group.hpp"
#include "maass/multiplier.hpp"
#include "maass/special_functions.hpp"

namespace maass {

using SampledFunction = std::function<cplx(cplx)>;

/// Value of a function and its two Maass operators at one point, for a
/// fixed weight w:  raise = E^+_w f,  lower = E^-_w f.
struct FormSample {
  cplx value;
  cplx raise;
  cplx lower;
};

/// Finite-difference step used by the generic operators: 1e-3 min(1, |y|).
double fd_step(cplx z);

/// E^{+-}_w f = +-2iy f_x + 2y f_y +- w f with y = Im z (signed in H^-),
/// derivatives by 5-point central differences.
cplx maass_raise(const SampledFunction& f, double w, cplx z);
cplx maass_lower(const SampledFunction& f, double w, cplx z);
/// Delta_w f = -y^2 (f_xx + f_yy) + i w y f_x.
cplx laplacian(const SampledFunction& f, double w, cplx z);

/// Point z = anchor + offset on an integration path, with the offset from a
/// nearby path endpoint known to full relative precision.
struct PathPoint {
  cplx z;
  cplx anchor;
  cplx offset;
  static PathPoint at(cplx z) { return {z, z, 0.0}; }
};

/// Anything that can be fed to the Maass-Selberg form. The default operator
/// implementation differences `value`.
class Operand {
 public:
  virtual ~Operand() = default;
  virtual cplx value(cplx z) const = 0;
  virtual FormSample sample(double w, cplx z) const;
  /// Same as sample(w, p.z); operands singular at an endpoint override this
  /// to use the exact offset.
  virtual FormSample sample_near(double w, const PathPoint& p) const { return sample(w, p.z); }
};

/// Operand backed by a plain function.
class FunctionOperand : public Operand {
 public:
  explicit FunctionOperand(SampledFunction f) : f_(std::move(f)) {}
  cplx value(cplx z) const override { return f_(z); }

 private:
  SampledFunction f_;
};

enum class Backend { holomorphic_embedding, whittaker_surrogate };

/// Maass cusp form of weight k with multiplier v and eigenvalue 1/4 - nu^2,
/// evaluated in H from one of two truncated expansions:
///  - holomorphic_embedding: u = y^{k/2} sum_{n>=1} c_n q^n (k even, nu = +-(k-1)/2);
///    when `reduce` is set, points are first moved into the standard
///    fundamental domain, which is only valid for genuinely modular c_n.
///  - whittaker_surrogate: u = sum_n a_n W_{k/2, nu}(4 pi (n+kappa0) y) e((n+kappa0) x)
///      + sum_n b_n W_{-k/2, nu}(4 pi (n-kappa0) y) e((kappa0-n) x)
///    with e^{2 pi i kappa0} = v(T) and e(t) = e^{2 pi i t}. T-equivariant, not
///    S-equivariant. Without the b_n the transform f vanishes on H^-.
class MaassForm : public Operand {
 public:
  static MaassForm holomorphic_embedding(double k, cplx nu, std::vector<cplx> coefficients,
                                         bool reduce = true);
  static MaassForm whittaker_surrogate(double k, const MultiplierSystem& v, cplx nu,
                                       std::vector<cplx> coefficients,
                                       std::vector<cplx> negative = {});

  double weight() const { return k_; }
  const MultiplierSystem& multiplier() const { return v_; }
  cplx nu() const { return nu_; }
  cplx eigenvalue() const { return lambda_; }
  Backend backend() const { return backend_; }
  double kappa0() const { return kappa0_; }
  const std::vector<cplx>& coefficients() const { return coeffs_; }
  const std::vector<cplx>& negative_coefficients() const { return negative_; }
  std::size_t truncation() const { return std::max(coeffs_.size(), negative_.size()); }
  bool is_zero() const;

  /// u(z), Im z > 0.
  cplx value(cplx z) const override;
  /// u, E^+_k u, E^-_k u from the expansion (no differencing). Other
  /// weights fall back to finite differences.
  FormSample sample(double w, cplx z) const override;

  /// Size of the first dropped term at height y, a proxy for the truncation
  /// error.
  double truncation_bound(double y) const;

  /// a u + b w for forms with identical parameters and backend.
  MaassForm combine(cplx a, const MaassForm& other, cplx b) const;

 private:
  MaassForm(double k, MultiplierSystem v, cplx nu, Backend backend,
            std::vector<cplx> coeffs, std::vector<cplx> negative, double kappa0, bool reduce);

  FormSample sample_holomorphic(cplx z) const;
  FormSample sample_surrogate(cplx z) const;

  double k_;
  MultiplierSystem v_;
  cplx nu_;
  cplx lambda_;
  Backend backend_;
  std::vector<cplx> coeffs_;  // coeffs_[n-1] multiplies the n-th term
  std::vector<cplx> negative_;
  std::shared_ptr<const WhittakerTable> w_pos_, w_neg_;
  double kappa0_;
  bool reduce_;
};

/// u~(z) = u(conj z) on H^-. Operators: E^-_{-k} u~(z) = (E^+_k u)(conj z)
/// and E^+_{-k} u~(z) = (E^-_k u)(conj z).
class ConjugateForm : public Operand {
 public:
  explicit ConjugateForm(const MaassForm& source) : source_(source) {}
  const MaassForm& source() const { return source_; }
  /// Im z < 0.
  cplx value(cplx z) const override;
  FormSample sample(double w, cplx z) const override;

 private:
  MaassForm source_;
};

/// tau(1), ..., tau(n) from q prod (1 - q^m)^24.
std::vector<std::int64_t> ramanujan_tau(std::size_t n);

/// y^6 Delta(z) with `terms` q-coefficients and spectral value nu = +-11/2.
MaassForm delta_embedding(cplx nu, std::size_t terms = 50);

/// (f|_k^v g)(z) = e^{-ik arg mu(g,z)} v(g)^{-1} f(gz).
SampledFunction slash(SampledFunction f, double k, const MultiplierSystem& v,
                      const GroupElement& g);
/// (f||_nu^v g)(z) = v(g)^{-1} mu(g,z)^{2nu-1} f(gz). At real z the factor
/// mu(g,z) must stay off the cut: g must have nonnegative entries or
/// mu(g,z) > 0, otherwise BranchViolation.
SampledFunction dslash(SampledFunction f, cplx nu, const MultiplierSystem& v,
                       const GroupElement& g);

}  // namespace maass
