#include "maass/maass_forms.hpp"

#include <cmath>

#include "maass/errors.hpp"
#include "maass/special_functions.hpp"

namespace maass {

namespace {

constexpr cplx kI(0.0, 1.0);

struct Partials {
  cplx fx, fy, fxx, fyy;
};

Partials partials(const SampledFunction& f, cplx z, bool second) {
  const double h = fd_step(z);
  const cplx dx(h, 0.0), dy(0.0, h);
  Partials p{};
  const cplx xp1 = f(z + dx), xm1 = f(z - dx), xp2 = f(z + 2.0 * dx), xm2 = f(z - 2.0 * dx);
  const cplx yp1 = f(z + dy), ym1 = f(z - dy), yp2 = f(z + 2.0 * dy), ym2 = f(z - 2.0 * dy);
  p.fx = (-xp2 + 8.0 * xp1 - 8.0 * xm1 + xm2) / (12.0 * h);
  p.fy = (-yp2 + 8.0 * yp1 - 8.0 * ym1 + ym2) / (12.0 * h);
  if (second) {
    const cplx f0 = f(z);
    p.fxx = (-xp2 + 16.0 * xp1 - 30.0 * f0 + 16.0 * xm1 - xm2) / (12.0 * h * h);
    p.fyy = (-yp2 + 16.0 * yp1 - 30.0 * f0 + 16.0 * ym1 - ym2) / (12.0 * h * h);
  }
  return p;
}

cplx phase(double t) { return std::polar(1.0, t); }

// Move z into the standard fundamental domain: returns g with g z = w.
GroupElement reduce_to_fundamental_domain(cplx z, cplx& w) {
  GroupElement g = GroupElement::identity();
  w = z;
  for (int iter = 0; iter < 10000; ++iter) {
    const double n = std::floor(w.real() + 0.5);
    if (n != 0.0) {
      w -= n;
      g = GroupElement(1, -static_cast<std::int64_t>(n), 0, 1) * g;
    }
    if (std::norm(w) < 1.0 - 1e-14) {
      w = -1.0 / w;
      g = GroupElement::S() * g;
    } else {
      return g;
    }
  }
  throw NonConvergence("fundamental domain reduction did not terminate", 0.0, 0.0);
}

}  // namespace

double fd_step(cplx z) { return 1e-3 * std::min(1.0, std::abs(z.imag())); }

cplx maass_raise(const SampledFunction& f, double w, cplx z) {
  const Partials p = partials(f, z, false);
  const double y = z.imag();
  return 2.0 * kI * y * p.fx + 2.0 * y * p.fy + w * f(z);
}

cplx maass_lower(const SampledFunction& f, double w, cplx z) {
  const Partials p = partials(f, z, false);
  const double y = z.imag();
  return -2.0 * kI * y * p.fx + 2.0 * y * p.fy - w * f(z);
}

cplx laplacian(const SampledFunction& f, double w, cplx z) {
  const Partials p = partials(f, z, true);
  const double y = z.imag();
  return -y * y * (p.fxx + p.fyy) + kI * w * y * p.fx;
}

FormSample Operand::sample(double w, cplx z) const {
  SampledFunction f = [this](cplx t) { return value(t); };
  const Partials p = partials(f, z, false);
  const double y = z.imag();
  const cplx v = value(z);
  return {v, 2.0 * kI * y * p.fx + 2.0 * y * p.fy + w * v,
          -2.0 * kI * y * p.fx + 2.0 * y * p.fy - w * v};
}

MaassForm::MaassForm(double k, MultiplierSystem v, cplx nu, Backend backend,
                     std::vector<cplx> coeffs, std::vector<cplx> negative, double kappa0,
                     bool reduce)
    : k_(k), v_(v), nu_(nu), lambda_(0.25 - nu * nu), backend_(backend),
      coeffs_(std::move(coeffs)), negative_(std::move(negative)), kappa0_(kappa0),
      reduce_(reduce) {
  if (backend_ != Backend::whittaker_surrogate) return;
  if (!coeffs_.empty()) w_pos_ = WhittakerTable::shared({k_ / 2.0, nu_});
  if (!negative_.empty()) w_neg_ = WhittakerTable::shared({-k_ / 2.0, nu_});
}

MaassForm MaassForm::holomorphic_embedding(double k, cplx nu, std::vector<cplx> coefficients,
                                           bool reduce) {
  if (!(k > 0.0 && std::fmod(k, 2.0) == 0.0)) {
    throw InvalidWeight("holomorphic embedding needs an even positive weight");
  }
  const double s = (k - 1.0) / 2.0;
  if (nu != cplx(s, 0.0) && nu != cplx(-s, 0.0)) {
    throw UnsupportedParameter("holomorphic embedding needs nu = +-(k-1)/2");
  }
  return MaassForm(k, MultiplierSystem::trivial(k), nu, Backend::holomorphic_embedding,
                   std::move(coefficients), {}, 0.0, reduce);
}

MaassForm MaassForm::whittaker_surrogate(double k, const MultiplierSystem& v, cplx nu,
                                         std::vector<cplx> coefficients,
                                         std::vector<cplx> negative) {
  if (v.weight() != k) throw InvalidWeight("multiplier weight differs from form weight");
  double kappa0 = principal_arg(v.v_T()) / (2.0 * kPi);
  kappa0 -= std::floor(kappa0);
  // e^{2 pi i kappa0} = v(T) is recorded exactly; guard the rounding case 1 - eps.
  if (kappa0 >= 1.0 - 1e-15) kappa0 = 0.0;
  return MaassForm(k, v, nu, Backend::whittaker_surrogate, std::move(coefficients),
                   std::move(negative), kappa0, false);
}

bool MaassForm::is_zero() const {
  for (const cplx& c : coeffs_) {
    if (c != cplx(0.0)) return false;
  }
  for (const cplx& c : negative_) {
    if (c != cplx(0.0)) return false;
  }
  return true;
}

cplx MaassForm::value(cplx z) const {
  if (!(z.imag() > 0.0)) throw DomainError("MaassForm evaluated off the upper half-plane");
  if (backend_ == Backend::whittaker_surrogate) return sample_surrogate(z).value;
  return sample_holomorphic(z).value;
}

FormSample MaassForm::sample(double w, cplx z) const {
  if (!(z.imag() > 0.0)) throw DomainError("MaassForm evaluated off the upper half-plane");
  if (w != k_) return Operand::sample(w, z);
  return backend_ == Backend::whittaker_surrogate ? sample_surrogate(z) : sample_holomorphic(z);
}

FormSample MaassForm::sample_holomorphic(cplx z) const {
  cplx w = z;
  std::optional<GroupElement> g;
  if (reduce_) g = reduce_to_fundamental_domain(z, w);
  const cplx q = std::exp(2.0 * kPi * kI * w);
  cplx sum = 0.0, dsum = 0.0, qn = q;
  for (std::size_t n = 1; n <= coeffs_.size(); ++n) {
    const cplx t = coeffs_[n - 1] * qn;
    sum += t;
    dsum += static_cast<double>(n) * t;
    qn *= q;
  }
  const double y = w.imag();
  const double yk = std::pow(y, k_ / 2.0);
  const cplx u = yk * sum;
  // E^+_k (y^{k/2} u_h) = 2k y^{k/2} u_h + 4i y^{k/2+1} u_h'
  const cplx raise = 2.0 * k_ * u + 4.0 * kI * yk * y * (2.0 * kPi * kI) * dsum;
  if (!g || *g == GroupElement::identity()) return {u, raise, 0.0};
  // u(z) = v(g)^{-1} e^{-ik arg mu(g,z)} u(gz); E^+_k u has weight k + 2.
  const double a = principal_arg(mu(*g, z));
  const cplx vinv = 1.0 / v_.evaluate(*g);
  return {vinv * phase(-k_ * a) * u, vinv * phase(-(k_ + 2.0) * a) * raise, 0.0};
}

FormSample MaassForm::sample_surrogate(cplx z) const {
  const double x = z.real(), y = z.imag();
  FormSample s{0.0, 0.0, 0.0};
  // sgn is the sign of the frequency m; Y = 4 pi |m| y.
  auto add = [&](cplx a, double m, double sgn, const WhittakerTable& table) {
    const double Y = 4.0 * kPi * std::abs(m) * y;
    const WhittakerValue W = table(Y);
    const cplx e = a * std::exp(2.0 * kPi * kI * m * x);
    s.value += W.value * e;
    s.raise += (2.0 * Y * W.derivative - sgn * Y * W.value + k_ * W.value) * e;
    s.lower += (2.0 * Y * W.derivative + sgn * Y * W.value - k_ * W.value) * e;
  };
  for (std::size_t n = 1; n <= coeffs_.size(); ++n) {
    if (coeffs_[n - 1] != cplx(0.0)) add(coeffs_[n - 1], n + kappa0_, 1.0, *w_pos_);
  }
  for (std::size_t n = 1; n <= negative_.size(); ++n) {
    if (negative_[n - 1] != cplx(0.0)) add(negative_[n - 1], kappa0_ - n, -1.0, *w_neg_);
  }
  return s;
}

double MaassForm::truncation_bound(double y) const {
  if (backend_ == Backend::whittaker_surrogate || coeffs_.empty()) return 0.0;
  const double n = static_cast<double>(coeffs_.size());
  if (reduce_) y = std::max(y, std::sqrt(3.0) / 2.0);
  return std::abs(coeffs_.back()) * std::pow(1.0 + 1.0 / n, k_ / 2.0) *
         std::pow(y, k_ / 2.0) * std::exp(-2.0 * kPi * (n + 1.0) * y);
}

MaassForm MaassForm::combine(cplx a, const MaassForm& other, cplx b) const {
  if (other.k_ != k_ || other.nu_ != nu_ || other.backend_ != backend_ ||
      other.kappa0_ != kappa0_ || other.reduce_ != reduce_) {
    throw UnsupportedParameter("combine: forms with different parameters");
  }
  auto mix = [&](const std::vector<cplx>& p, const std::vector<cplx>& q) {
    std::vector<cplx> c(std::max(p.size(), q.size()), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) c[i] += a * p[i];
    for (std::size_t i = 0; i < q.size(); ++i) c[i] += b * q[i];
    return c;
  };
  return MaassForm(k_, v_, nu_, backend_, mix(coeffs_, other.coeffs_),
                   mix(negative_, other.negative_), kappa0_, reduce_);
}

cplx ConjugateForm::value(cplx z) const {
  if (!(z.imag() < 0.0)) throw DomainError("conjugate form evaluated off the lower half-plane");
  return source_.value(std::conj(z));
}

FormSample ConjugateForm::sample(double w, cplx z) const {
  if (!(z.imag() < 0.0)) throw DomainError("conjugate form evaluated off the lower half-plane");
  if (w != -source_.weight()) return Operand::sample(w, z);
  const FormSample s = source_.sample(source_.weight(), std::conj(z));
  return {s.value, s.lower, s.raise};
}

std::vector<std::int64_t> ramanujan_tau(std::size_t n) {
  // prod (1 - q^m) up to q^{n-1} from Euler's pentagonal theorem
  std::vector<std::int64_t> euler(n, 0);
  if (n == 0) return {};
  euler[0] = 1;
  for (std::int64_t m = 1;; ++m) {
    const std::int64_t sign = (m % 2 == 0) ? 1 : -1;
    const auto e1 = static_cast<std::size_t>(m * (3 * m - 1) / 2);
    const auto e2 = static_cast<std::size_t>(m * (3 * m + 1) / 2);
    if (e1 >= n) break;
    euler[e1] += sign;
    if (e2 < n) euler[e2] += sign;
  }
  std::vector<std::int64_t> power(n, 0);
  power[0] = 1;
  for (int rep = 0; rep < 24; ++rep) {
    std::vector<std::int64_t> next(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (power[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) next[i + j] += power[i] * euler[j];
    }
    power = std::move(next);
  }
  // tau(m) is the coefficient of q^{m-1} in prod (1 - q^m)^24
  return power;
}

MaassForm delta_embedding(cplx nu, std::size_t terms) {
  const auto tau = ramanujan_tau(terms);
  std::vector<cplx> c(tau.begin(), tau.end());
  return MaassForm::holomorphic_embedding(12.0, nu, std::move(c), true);
}

SampledFunction slash(SampledFunction f, double k, const MultiplierSystem& v,
                      const GroupElement& g) {
  const cplx vinv = 1.0 / v.evaluate(g);
  return [f = std::move(f), k, vinv, g](cplx z) {
    return phase(-k * principal_arg(mu(g, z))) * vinv * f(moebius(g, z));
  };
}

SampledFunction dslash(SampledFunction f, cplx nu, const MultiplierSystem& v,
                       const GroupElement& g) {
  const cplx vinv = 1.0 / v.evaluate(g);
  return [f = std::move(f), nu, vinv, g](cplx z) {
    const cplx m = mu(g, z);
    if (z.imag() == 0.0 && !is_positive_real(m)) {
      throw BranchViolation("dslash at a real point with mu(g, z) <= 0 (" + g.to_string() + ")");
    }
    return vinv * principal_pow(m, 2.0 * nu - 1.0) * f(moebius(g, z));
  };
}

}  // namespace maass
