#include "maass/special_functions.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "maass/errors.hpp"
#include "maass/gauss_kronrod.hpp"

namespace maass {

namespace {

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// ln(1e18) plus a little headroom.
constexpr double kTailLog = 42.0;

}  // namespace

cplx complex_gamma(cplx s) {
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real())) {
    throw DomainError("gamma: pole at a non-positive integer");
  }
  if (s.real() < 0.5) {
    return kPi / (std::sin(kPi * s) * complex_gamma(1.0 - s));
  }
  s -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (s + static_cast<double>(i));
  const cplx t = s + 7.5;
  return std::sqrt(2.0 * kPi) * std::exp((s + 0.5) * std::log(t) - t) * x;
}

double bessel_k_cutoff(cplx nu, double x) {
  // Smallest T with x (cosh T - 1) - |Re nu| T >= kTailLog; relative to the
  // peak e^{-x} this also gives e^{-x cosh T} < 1e-18.
  const double r = std::abs(nu.real());
  double T = std::acosh(1.0 + kTailLog / x);
  for (int i = 0; i < 60; ++i) {
    const double next = std::acosh(1.0 + (kTailLog + r * T) / x);
    if (std::abs(next - T) < 1e-12) break;
    T = next;
  }
  return T;
}

cplx bessel_k_truncated(cplx nu, double x, double cutoff) {
  if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");
  auto g = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
  GKOptions opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-16 * std::exp(-x);
  opt.initial_panels = 4 + static_cast<int>(std::abs(nu.imag()) * cutoff / 4.0);
  return integrate_gk(g, 0.0, cutoff, opt).value;
}

cplx bessel_k(cplx nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");
  return bessel_k_truncated(nu, x, bessel_k_cutoff(nu, x));
}

namespace {

struct ReducedParams {
  cplx a, b;
  bool collapsed;
};

ReducedParams reduce(const WhittakerParams& p) {
  cplx mu = p.mu;
  cplx a = mu - p.kappa + 0.5;
  if (a == cplx(0.0, 0.0)) return {a, mu + p.kappa - 0.5, true};
  if (a.real() <= 0.0) {
    mu = -mu;
    a = mu - p.kappa + 0.5;
    if (a == cplx(0.0, 0.0)) return {a, mu + p.kappa - 0.5, true};
    if (a.real() <= 0.0) {
      throw UnsupportedParameter("whittaker_w: Re(mu - kappa + 1/2) <= 0 for both signs of mu");
    }
  }
  return {a, mu + p.kappa - 0.5, false};
}

// int_{-inf}^{-L} e^{a s} e^{-e^s} (1 + e^s/Y)^b ds from the first three
// Taylor terms in t = e^s.
cplx lower_tail(cplx a, cplx b, double Y, double L) {
  const cplx c1 = b / Y - 1.0;
  const cplx c2 = 0.5 - b / Y + b * (b - 1.0) / (2.0 * Y * Y);
  cplx s = std::exp(-a * L) / a;
  s += c1 * std::exp(-(a + 1.0) * L) / (a + 1.0);
  s += c2 * std::exp(-(a + 2.0) * L) / (a + 2.0);
  return s;
}

double upper_t(cplx a, cplx b, double Y) {
  // e^{-t} t^{Re a} (1+t/Y)^{max(Re b,0)} below e^{-kTailLog}.
  double t = kTailLog;
  for (int i = 0; i < 200; ++i) {
    const double lg = t - std::max(a.real(), 0.0) * std::log(t) -
                      std::max(b.real(), 0.0) * std::log1p(t / Y);
    if (lg >= kTailLog + 2.0) break;
    t *= 1.25;
  }
  return t;
}

}  // namespace

WhittakerValue whittaker_w_with_derivative(const WhittakerParams& p, double y) {
  if (!(y > 0.0)) throw DomainError("whittaker_w: y must be positive");
  const ReducedParams r = reduce(p);
  const cplx prefactor = std::exp(-0.5 * y) * std::pow(y, p.kappa);
  if (r.collapsed) {
    return {prefactor, prefactor * (-0.5 + p.kappa / y)};
  }
  const cplx a = r.a, b = r.b;
  const double L = 20.0 + std::log(1.0 / std::min(y, 1.0));
  const double s_hi = std::log(upper_t(a, b, y));
  // Component 0: int e^{-t} t^{a-1} (1+t/y)^b dt.
  // Component 1: int e^{-t} t^{a} (1+t/y)^{b-1} dt.
  auto g = [&](double s) {
    const double t = std::exp(s);
    const double lg = std::log1p(t / y);
    const cplx base = std::exp(a * s - t);
    const cplx w0 = base * std::exp(b * lg);
    const cplx w1 = base * t * std::exp((b - 1.0) * lg);
    return std::array<cplx, 2>{w0, w1};
  };
  GKOptions opt;
  opt.initial_panels = 8 + static_cast<int>(std::abs(a.imag()) * (L + s_hi) / 3.0);
  // Oscillation cancels most of the integrand for large |Im mu| and small y,
  // so the tolerance is set against the integral of |g| instead of the result.
  GKOptions rough = opt;
  rough.rel_tol = 1e-3;
  const double mass = integrate_gk(
      [&](double s) {
        const double t = std::exp(s);
        return std::exp(a.real() * s - t + b.real() * std::log1p(t / y));
      },
      -L, s_hi, rough).value;
  opt.rel_tol = 1e-14;
  opt.abs_tol = 1e-15 * mass;
  opt.max_evals = 2000000;
  auto res = integrate_gk(g, -L, s_hi, opt);
  const cplx i0 = res.value[0] + lower_tail(a, b, y, L);
  const cplx i1 = res.value[1] + lower_tail(a + 1.0, b - 1.0, y, L);
  const cplx inv_gamma = 1.0 / complex_gamma(a);
  const cplx w = prefactor * inv_gamma * i0;
  const cplx dw = w * (-0.5 + p.kappa / y) - prefactor * inv_gamma * (b / (y * y)) * i1;
  return {w, dw};
}

cplx whittaker_w(const WhittakerParams& p, double y) {
  return whittaker_w_with_derivative(p, y).value;
}

namespace {

constexpr int kNodes = 24;
constexpr double kPanelWidth = 0.25;

// Chebyshev points of the second kind on [-1, 1] and barycentric weights.
struct ChebNodes {
  double x[kNodes];
  double w[kNodes];
  ChebNodes() {
    for (int j = 0; j < kNodes; ++j) {
      x[j] = std::cos(kPi * j / (kNodes - 1));
      w[j] = (j % 2 ? -1.0 : 1.0) * ((j == 0 || j == kNodes - 1) ? 0.5 : 1.0);
    }
  }
};

const ChebNodes& cheb() {
  static const ChebNodes n;
  return n;
}

}  // namespace

WhittakerTable::WhittakerTable(const WhittakerParams& p, double y_min, double y_max)
    : p_(p), s_min_(std::log(y_min)), s_max_(std::log(y_max)) {
  panels_ = static_cast<int>(std::ceil((s_max_ - s_min_) / kPanelWidth));
  width_ = (s_max_ - s_min_) / panels_;
  w_.resize(static_cast<std::size_t>(panels_) * kNodes);
  dw_.resize(w_.size());
  for (int i = 0; i < panels_; ++i) {
    for (int j = 0; j < kNodes; ++j) {
      const double s = s_min_ + width_ * (i + 0.5 * (cheb().x[j] + 1.0));
      const double y = std::exp(s);
      const WhittakerValue v = whittaker_w_with_derivative(p_, y);
      const double scale = std::exp(y / 2.0 - p_.kappa * s);
      w_[i * kNodes + j] = v.value * scale;
      dw_[i * kNodes + j] = v.derivative * scale;
    }
  }
}

WhittakerValue WhittakerTable::operator()(double y) const {
  if (!(y > 0.0)) throw DomainError("Whittaker function needs y > 0");
  const double s = std::log(y);
  if (s > s_max_) return {0.0, 0.0};
  if (s < s_min_) return whittaker_w_with_derivative(p_, y);
  int i = static_cast<int>((s - s_min_) / width_);
  i = std::min(std::max(i, 0), panels_ - 1);
  const double t = 2.0 * (s - s_min_ - width_ * i) / width_ - 1.0;
  const ChebNodes& c = cheb();
  cplx num_w = 0.0, num_d = 0.0;
  double den = 0.0;
  for (int j = 0; j < kNodes; ++j) {
    const double diff = t - c.x[j];
    if (diff == 0.0) {
      num_w = w_[i * kNodes + j];
      num_d = dw_[i * kNodes + j];
      den = 1.0;
      break;
    }
    const double q = c.w[j] / diff;
    num_w += q * w_[i * kNodes + j];
    num_d += q * dw_[i * kNodes + j];
    den += q;
  }
  const double back = std::exp(-y / 2.0 + p_.kappa * s);
  return {num_w / den * back, num_d / den * back};
}

std::shared_ptr<const WhittakerTable> WhittakerTable::shared(const WhittakerParams& p) {
  static std::mutex m;
  static std::vector<std::pair<WhittakerParams, std::shared_ptr<const WhittakerTable>>> cache;
  std::lock_guard<std::mutex> lock(m);
  for (const auto& [q, t] : cache) {
    if (q.kappa == p.kappa && q.mu == p.mu) return t;
  }
  auto t = std::make_shared<const WhittakerTable>(p);
  cache.emplace_back(p, t);
  return t;
}

}  // namespace maass
