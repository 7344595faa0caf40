#pragma once

#include "maass/complex_branch.hpp"
#include "maass/maass_forms.hpp"
#include "maass/modular_group.hpp"

namespace maass {

/// R_{k,nu}(z, zeta) = (sqrt(zeta-z)/sqrt(zeta-conj z))^{-k}
///                     (|Im z| / ((zeta-z)(zeta-conj z)))^{1/2-nu}.
class RKernel {
 public:
  RKernel(double k, cplx nu) : k_(k), nu_(nu) {}
  double weight() const { return k_; }
  cplx nu() const { return nu_; }

  /// The displayed formula with a principal power of the full quotient.
  /// Throws RDomainError naming the difference that lies on (-inf, 0].
  cplx literal(cplx z, cplx zeta) const;

  /// Same function with the power of the quotient split as
  /// |y|^{1/2-nu} (zeta-z)^{nu-1/2} (zeta-conj z)^{nu-1/2}. Holomorphic in
  /// zeta on the whole two-cut plane; agrees with `literal` wherever
  /// arg(zeta-z) + arg(zeta-conj z) stays in (-pi, pi).
  cplx continued(cplx z, cplx zeta) const;
  /// `continued` from |Im z| and the differences a = zeta - z, b = zeta - conj z.
  cplx continued_from(double abs_y, cplx a, cplx b) const;

 private:
  double k_;
  cplx nu_;
};

/// Checks zeta - z, zeta - conj z not in (-inf, 0] and Im z != 0.
void check_r_domain(cplx z, cplx zeta);

cplx r_eval(const RKernel& K, cplx z, cplx zeta);

/// Relative residual of
///   R(gz, g zeta) = e^{ik arg mu(g,z)} mu(g,zeta)^{1-2nu} R(z, zeta)
/// after checking its hypotheses; PreconditionError names the failing one.
double r_transform_check(const RKernel& K, const GroupElement& g, cplx z, cplx zeta);

/// z -> R_{k,nu}(z, zeta) as an operand of the Maass-Selberg form (continued
/// branch). Operators of weight k use E^{+-}_k R_{k,nu} = (1 - 2nu +- k) R_{k+-2,nu}
/// in both half-planes (on H^-, R_{k,nu}(z) = R_{-k,nu}(conj z), so the weight
/// does not flip). Other weights are differenced.
class KernelOperand : public Operand {
 public:
  KernelOperand(double k, cplx nu, cplx zeta) : k_(k), nu_(nu), zeta_(zeta) {}
  cplx value(cplx z) const override;
  FormSample sample(double w, cplx z) const override;
  /// zeta - z and zeta - conj z formed from the offset, so that points close
  /// to zeta or conj zeta keep their relative accuracy.
  FormSample sample_near(double w, const PathPoint& p) const override;
  cplx zeta() const { return zeta_; }

 private:
  double k_;
  cplx nu_;
  cplx zeta_;
};

/// A dz + B dzbar at a point.
struct OneFormSample {
  cplx A;
  cplx B;
  cplx at;

  /// A z'(t) + B conj(z'(t)).
  cplx pullback(cplx dz) const { return A * dz + B * std::conj(dz); }
};

/// eta_k(f, g) = {E^+_k f, g}^+ - {f, E^-_{-k} g}^-, i.e.
/// A = (E^+_k f) g / y and B = -f (E^-_{-k} g) / y with y = Im z.
OneFormSample eta_form(double k, const Operand& f, const Operand& g, cplx z);
OneFormSample eta_form(double k, const Operand& f, const Operand& g, const PathPoint& p);

/// (omega|_0^v g)(z) = v(g)^{-1} times the pullback of omega under z -> gz.
/// `omega_at_gz` must be the form sampled at gz.
OneFormSample slash_form(const OneFormSample& omega_at_gz, const GroupElement& g, cplx z,
                         cplx v_of_g);

}  // namespace maass
