#include "maass/ms_kernel.hpp"

#include <cmath>
#include <string>

#include "maass/errors.hpp"

namespace maass {

void check_r_domain(cplx z, cplx zeta) {
  if (z.imag() == 0.0) throw RDomainError("R-function needs Im z != 0");
  if (on_cut(zeta - z)) throw RDomainError("R-function: zeta - z lies on (-inf, 0]");
  if (on_cut(zeta - std::conj(z))) {
    throw RDomainError("R-function: zeta - conj(z) lies on (-inf, 0]");
  }
}

namespace {

cplx weight_factor(double k, cplx a, cplx b) {
  if (k == 0.0) return 1.0;
  return principal_pow(principal_sqrt(a) / principal_sqrt(b), -k);
}

}  // namespace

cplx RKernel::literal(cplx z, cplx zeta) const {
  check_r_domain(z, zeta);
  const cplx a = zeta - z, b = zeta - std::conj(z);
  const cplx q = std::abs(z.imag()) / (a * b);
  return weight_factor(k_, a, b) * principal_pow(q, 0.5 - nu_);
}

cplx RKernel::continued(cplx z, cplx zeta) const {
  check_r_domain(z, zeta);
  return continued_from(std::abs(z.imag()), zeta - z, zeta - std::conj(z));
}

cplx RKernel::continued_from(double abs_y, cplx a, cplx b) const {
  if (abs_y == 0.0) throw RDomainError("R-function needs Im z != 0");
  if (on_cut(a)) throw RDomainError("R-function: zeta - z lies on (-inf, 0]");
  if (on_cut(b)) throw RDomainError("R-function: zeta - conj(z) lies on (-inf, 0]");
  const cplx s = nu_ - 0.5;
  return weight_factor(k_, a, b) * principal_pow(abs_y, -s) * principal_pow(a, s) *
         principal_pow(b, s);
}

cplx r_eval(const RKernel& K, cplx z, cplx zeta) { return K.literal(z, zeta); }

double r_transform_check(const RKernel& K, const GroupElement& g, cplx z, cplx zeta) {
  try {
    check_r_domain(z, zeta);
  } catch (const RDomainError& e) {
    throw PreconditionError(std::string("(z, zeta) outside the kernel domain: ") + e.what());
  }
  const cplx mz = mu(g, z), mzeta = mu(g, zeta);
  if (on_cut(mz)) throw PreconditionError("mu(g, z) lies on (-inf, 0]");
  if (on_cut(mzeta)) throw PreconditionError("mu(g, zeta) lies on (-inf, 0]");
  if (!(mzeta.real() > 0.0)) throw PreconditionError("Re mu(g, zeta) <= 0");

  auto on_ray_above = [](cplx p, cplx base) {
    const cplx d = p - base;
    return d.imag() > 0.0 && std::abs(d.real()) <= 1e-12 * (std::abs(p) + std::abs(base));
  };
  const bool c1 = is_positive_real(mzeta);
  const bool c2 = zeta.imag() > 0.0 && on_ray_above(moebius(g, z), moebius(g, zeta));
  const bool c3 = zeta.imag() < 0.0 &&
                  on_ray_above(moebius(g, std::conj(z)), moebius(g, std::conj(zeta)));
  if (!(c1 || c2 || c3)) {
    throw PreconditionError(
        "none of: mu(g, zeta) > 0; zeta in H with gz above g zeta; zeta in H^- with "
        "g conj(z) above g conj(zeta)");
  }
  const cplx lhs = K.literal(moebius(g, z), moebius(g, zeta));
  const cplx rhs = std::polar(1.0, K.weight() * principal_arg(mz)) *
                   principal_pow(mzeta, 1.0 - 2.0 * K.nu()) * K.literal(z, zeta);
  return std::abs(lhs - rhs) / std::abs(rhs);
}

cplx KernelOperand::value(cplx z) const { return RKernel(k_, nu_).continued(z, zeta_); }

FormSample KernelOperand::sample(double w, cplx z) const {
  if (w != k_) return Operand::sample(w, z);
  const cplx c_up = 1.0 - 2.0 * nu_ + k_, c_down = 1.0 - 2.0 * nu_ - k_;
  return {RKernel(k_, nu_).continued(z, zeta_), c_up * RKernel(k_ + 2, nu_).continued(z, zeta_),
          c_down * RKernel(k_ - 2, nu_).continued(z, zeta_)};
}

FormSample KernelOperand::sample_near(double w, const PathPoint& p) const {
  if (w != k_ || p.offset == cplx(0.0)) return sample(w, p.z);
  const cplx a = (zeta_ - p.anchor) - p.offset;
  const cplx b = (zeta_ - std::conj(p.anchor)) - std::conj(p.offset);
  const double y = std::abs(p.z.imag());
  const cplx c_up = 1.0 - 2.0 * nu_ + k_, c_down = 1.0 - 2.0 * nu_ - k_;
  return {RKernel(k_, nu_).continued_from(y, a, b),
          c_up * RKernel(k_ + 2, nu_).continued_from(y, a, b),
          c_down * RKernel(k_ - 2, nu_).continued_from(y, a, b)};
}

OneFormSample eta_form(double k, const Operand& f, const Operand& g, cplx z) {
  return eta_form(k, f, g, PathPoint::at(z));
}

OneFormSample eta_form(double k, const Operand& f, const Operand& g, const PathPoint& p) {
  const double y = p.z.imag();
  const FormSample fs = f.sample_near(k, p);
  const FormSample gs = g.sample_near(-k, p);
  return {fs.raise * gs.value / y, -fs.value * gs.lower / y, p.z};
}

OneFormSample slash_form(const OneFormSample& omega_at_gz, const GroupElement& g, cplx z,
                         cplx v_of_g) {
  const cplx m = mu(g, z);
  const cplx d = 1.0 / (m * m);  // d(gz)/dz
  return {omega_at_gz.A * d / v_of_g, omega_at_gz.B * std::conj(d) / v_of_g, z};
}

}  // namespace maass
