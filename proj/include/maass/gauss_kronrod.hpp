#pragma once

// Global adaptive Gauss-Kronrod (7/15) integration on a finite interval.
// The integrand may return double, complex, or a fixed-size array of
// complex values; the error of a panel is the norm of (Kronrod - Gauss).

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <algorithm>
#include <queue>
#include <string>
#include <type_traits>
#include <vector>

#include "maass/errors.hpp"

namespace maass {

inline double gk_norm(double v) { return std::abs(v); }
inline double gk_norm(std::complex<double> v) { return std::abs(v); }
template <std::size_t N>
double gk_norm(const std::array<std::complex<double>, N>& v) {
  double m = 0.0;
  for (const auto& e : v) m = std::max(m, std::abs(e));
  return m;
}

template <class T>
struct GKResult {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

struct GKOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  std::size_t max_evals = 1000000;
  int initial_panels = 1;
};

namespace detail {

inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
T scaled(const T& v, double s) {
  if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, std::complex<double>>) {
    return v * s;
  } else {
    T out = v;
    for (auto& e : out) e *= s;
    return out;
  }
}

template <class T>
T add(const T& a, const T& b) {
  if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, std::complex<double>>) {
    return a + b;
  } else {
    T out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
  }
}

template <class T>
T sub(const T& a, const T& b) {
  return add(a, scaled(b, -1.0));
}

template <class T>
std::complex<double> first_component(const T& v) {
  if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, std::complex<double>>) {
    return v;
  } else {
    return v[0];
  }
}

template <class T>
struct Panel {
  double a, b;
  T value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class T, class F>
Panel<T> gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const T fc = f(c);
  T kron = scaled(fc, kWgk[7]);
  T gauss = scaled(fc, kWg[3]);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const T sum = add(f(c - dx), f(c + dx));
    kron = add(kron, scaled(sum, kWgk[j]));
    if (j % 2 == 1) gauss = add(gauss, scaled(sum, kWg[j / 2]));
  }
  kron = scaled(kron, h);
  gauss = scaled(gauss, h);
  return {a, b, kron, gk_norm(sub(kron, gauss))};
}

}  // namespace detail

/// Integrate f over [a, b]. Converged when the summed panel error is at most
/// max(abs_tol, rel_tol * |I|). Throws NonConvergence (carrying the partial
/// value of the first component) when the evaluation budget is exhausted or
/// panels cannot be split further.
template <class F>
auto integrate_gk(F f, double a, double b, const GKOptions& opt = {})
    -> GKResult<decltype(f(0.0))> {
  using T = decltype(f(0.0));
  std::priority_queue<detail::Panel<T>> heap;
  GKResult<T> out;
  T total{};
  double err = 0.0;
  const int n0 = std::max(1, opt.initial_panels);
  for (int i = 0; i < n0; ++i) {
    const double lo = a + (b - a) * i / n0;
    const double hi = (i + 1 == n0) ? b : a + (b - a) * (i + 1) / n0;
    auto p = detail::gk15<T>(f, lo, hi);
    out.evaluations += 15;
    total = detail::add(total, p.value);
    err += p.error;
    heap.push(std::move(p));
  }
  auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * gk_norm(total)); };
  while (err > target()) {
    if (out.evaluations + 30 > opt.max_evals) {
      throw NonConvergence("adaptive quadrature: evaluation budget exhausted",
                           detail::first_component(total), err);
    }
    auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NonConvergence("adaptive quadrature: panel below resolution",
                           detail::first_component(total), err);
    }
    heap.pop();
    auto left = detail::gk15<T>(f, worst.a, mid);
    auto right = detail::gk15<T>(f, mid, worst.b);
    out.evaluations += 30;
    total = detail::add(total, detail::sub(detail::add(left.value, right.value), worst.value));
    err += left.error + right.error - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
  }
  // Re-sum to limit the drift of the running total.
  T sum{};
  double esum = 0.0;
  while (!heap.empty()) {
    sum = detail::add(sum, heap.top().value);
    esum += heap.top().error;
    heap.pop();
  }
  out.value = sum;
  out.error = esum;
  return out;
}

}  // namespace maass
