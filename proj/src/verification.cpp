#include "maass/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <tuple>

#include "maass/errors.hpp"
#include "maass/modular_group.hpp"
#include "maass/ms_kernel.hpp"
#include "maass/multiplier.hpp"
#include "maass/quadrature.hpp"

namespace maass {

namespace {

constexpr cplx kI(0.0, 1.0);

class Recorder {
 public:
  void add(double residual) {
    ++points_;
    if (!(residual <= max_)) max_ = std::isnan(residual) ? kInf : residual;
  }
  std::size_t points() const { return points_; }
  double max() const { return max_; }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  std::size_t points_ = 0;
  double max_ = 0.0;
};

using Entries = std::vector<IdentityCheck>;

void check(Entries& out, std::string id, std::string statement, double tol,
           const std::function<void(Recorder&)>& body) {
  IdentityCheck c{std::move(id), std::move(statement), 0, 0.0, tol, false, ""};
  Recorder r;
  bool threw = false;
  try {
    body(r);
  } catch (const std::exception& e) {
    threw = true;
    c.note = e.what();
  }
  c.points = r.points();
  c.max_residual = threw ? std::numeric_limits<double>::infinity() : r.max();
  c.pass = !threw && r.points() > 0 && r.max() <= tol;
  out.push_back(std::move(c));
}

double rel(cplx a, cplx b) {
  const double d = std::abs(a - b);
  return std::abs(b) > 0.0 ? d / std::abs(b) : d;
}

GroupElement random_element(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> E(-bound, bound);
  for (;;) {
    const std::int64_t a = E(rng), c = E(rng);
    if (std::gcd(a, c) != 1) continue;
    std::int64_t r0 = a, r1 = c, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
      std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
      std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
    }
    std::int64_t d = s0 * r0, b = -t0 * r0;
    const double m = -std::round((a * static_cast<double>(b) + c * static_cast<double>(d)) /
                                 static_cast<double>(a * a + c * c));
    b += static_cast<std::int64_t>(m) * a;
    d += static_cast<std::int64_t>(m) * c;
    if (std::llabs(b) > bound || std::llabs(d) > bound) continue;
    return GroupElement(a, b, c, d);
  }
}

// 5-point central difference of f along step; a step i h gives -i f_y.
cplx diff(const SampledFunction& f, cplx z, cplx step) {
  return (-f(z + 2.0 * step) + 8.0 * f(z + step) - 8.0 * f(z - step) + f(z - 2.0 * step)) /
         (12.0 * step);
}
cplx d_dz(const SampledFunction& f, cplx z) {
  const double h = fd_step(z);
  return 0.5 * (diff(f, z, h) + diff(f, z, kI * h));
}
cplx d_dzbar(const SampledFunction& f, cplx z) {
  const double h = fd_step(z);
  return 0.5 * (diff(f, z, h) - diff(f, z, kI * h));
}

// ---------------------------------------------------------------- branch

Entries branch_suite(const VerifyConfig& cfg) {
  Entries out;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> X(-3.0, 3.0), A(-2.0, 2.0);

  check(out, "branch.arg_on_cut", "arg of a negative real is +pi for either sign of zero",
        0.0, [](Recorder& r) {
          for (double x : {1.0, 2.5, 1e-300, 1e300}) {
            r.add(std::abs(principal_arg(cplx(-x, 0.0)) - kPi));
            r.add(std::abs(principal_arg(cplx(-x, -0.0)) - kPi));
          }
        });
  check(out, "branch.pow_exponent_sum", "z^a z^b = z^(a+b) off the cut", 1e-12,
        [&](Recorder& r) {
          for (int i = 0; i < 200; ++i) {
            const cplx z(X(rng), X(rng)), a(A(rng), A(rng)), b(A(rng), A(rng));
            if (on_cut(z)) continue;
            r.add(rel(principal_pow(z, a) * principal_pow(z, b), principal_pow(z, a + b)));
          }
        });
  check(out, "branch.factorization", "(zw)^a = z^a w^a whenever the factorization predicate holds",
        1e-12, [&](Recorder& r) {
          std::uniform_real_distribution<double> P(0.1, 4.0);
          for (int i = 0; i < 200; ++i) {
            const cplx a(A(rng), A(rng));
            cplx z(X(rng), X(rng)), w;
            if (i % 2 == 0) {
              w = z;
              z = P(rng);
            } else {
              w = P(rng) / z;
            }
            if (on_cut(z) || on_cut(w) || !factorizable(z, w)) continue;
            r.add(rel(principal_pow(z * w, a), principal_pow(z, a) * principal_pow(w, a)));
          }
        });
  check(out, "branch.conjugate_power", "conj(z^a) = conj(z)^conj(a) off the cut", 1e-13,
        [&](Recorder& r) {
          for (int i = 0; i < 200; ++i) {
            const cplx z(X(rng), X(rng)), a(A(rng), A(rng));
            if (on_cut(z) || z.imag() == 0.0) continue;
            r.add(rel(std::conj(principal_pow(z, a)), principal_pow(std::conj(z), std::conj(a))));
          }
        });
  return out;
}

// ---------------------------------------------------------------- group

Entries group_suite(const VerifyConfig& cfg) {
  Entries out;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> X(-2.0, 2.0), Y(0.05, 3.0);
  const GroupElement S = GroupElement::S(), T = GroupElement::T();

  check(out, "group.relations", "S^2 = (ST)^3 = -1 and TST = T'", 0.0, [&](Recorder& r) {
    const GroupElement m = GroupElement::minus_identity();
    r.add(S * S == m ? 0.0 : 1.0);
    r.add(S * T * S * T * S * T == m ? 0.0 : 1.0);
    r.add(T * S * T == GroupElement::T_prime() ? 0.0 : 1.0);
  });
  check(out, "group.decompose_roundtrip", "the generator word of g multiplies back to g", 0.0,
        [&](Recorder& r) {
          for (int i = 0; i < 500; ++i) {
            const GroupElement g = random_element(rng, 50);
            const Decomposition d = decompose(g);
            const GroupElement p = d.word.product();
            r.add((d.sign == 1 ? p : -p) == g ? 0.0 : 1.0);
          }
        });
  check(out, "group.mu_cocycle", "mu(gh, z) = mu(g, hz) mu(h, z)", 1e-12, [&](Recorder& r) {
    for (int i = 0; i < 500; ++i) {
      const GroupElement g = random_element(rng, 50), h = random_element(rng, 50);
      const cplx z(X(rng), Y(rng));
      r.add(rel(mu(g, moebius(h, z)) * mu(h, z), mu(g * h, z)));
    }
  });
  check(out, "group.imaginary_part", "Im gz = Im z / |mu(g, z)|^2, relative to max(Im gz, |gz|)", 1e-12, [&](Recorder& r) {
    for (int i = 0; i < 500; ++i) {
      const GroupElement g = random_element(rng, 50);
      const cplx z(X(rng), Y(rng));
      const double expect = z.imag() / std::norm(mu(g, z));
      const cplx gz = moebius(g, z);
      r.add(std::abs(gz.imag() - expect) / std::max(expect, std::abs(gz)));
    }
  });
  return out;
}

// ---------------------------------------------------------------- multiplier

Entries multiplier_suite(const VerifyConfig& cfg) {
  Entries out;
  std::vector<double> weights = {0.5, 1.5, 12.0};
  if (cfg.multiplier_weight) weights = {*cfg.multiplier_weight};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> X(-2.0, 2.0), Y(0.1, 3.0);

  check(out, "multiplier.consistency",
        "v(gh) e^{ik arg mu(gh,z)} = v(g) v(h) e^{ik arg mu(g,hz)} e^{ik arg mu(h,z)} on 500 "
        "random pairs with entries up to 50",
        1e-11, [&](Recorder& r) {
          for (double k : weights) {
            const auto v = MultiplierSystem::eta_power(k);
            for (int i = 0; i < 500; ++i) {
              const GroupElement g = random_element(rng, 50), h = random_element(rng, 50);
              r.add(v.consistency_residual(g, h, cplx(X(rng), Y(rng))));
            }
          }
        });
  check(out, "multiplier.minus_identity", "v(-1) = e^{-ik pi}, also from the word S S", 1e-13,
        [&](Recorder& r) {
          const GeneratorWord ss{{Generator::S, Generator::S}};
          for (double k : weights) {
            const auto v = MultiplierSystem::eta_power(k);
            const cplx expect = std::polar(1.0, -k * kPi);
            r.add(std::abs(v.evaluate(GroupElement::minus_identity()) - expect));
            r.add(std::abs(v.evaluate_word(ss, cplx(0.0, 2.0)) - expect));
          }
        });
  check(out, "multiplier.v_S_squared", "v(S)^2 = e^{-ik pi}", 1e-13, [&](Recorder& r) {
    for (double k : weights) {
      const auto v = MultiplierSystem::eta_power(k);
      r.add(std::abs(v.v_S() * v.v_S() - std::polar(1.0, -k * kPi)));
    }
  });
  check(out, "multiplier.word_independence",
        "values agree for different words of the same element and different base points", 1e-12,
        [&](Recorder& r) {
          const GeneratorWord tst{{Generator::T, Generator::S, Generator::T}};
          const GeneratorWord st3{{Generator::S, Generator::T, Generator::S, Generator::T,
                                   Generator::S, Generator::T}};
          for (double k : weights) {
            const auto v = MultiplierSystem::eta_power(k);
            for (cplx base : {cplx(0.0, 2.0), cplx(0.4, 0.7), cplx(-3.0, 0.2)}) {
              r.add(std::abs(v.evaluate_word(tst, base) - v.evaluate(GroupElement::T_prime())));
              r.add(std::abs(v.evaluate_word(st3, base) -
                             v.evaluate(GroupElement::minus_identity())));
              const GroupElement g = random_element(rng, 20);
              r.add(std::abs(v.evaluate_at(g, base) - v.evaluate(g)));
            }
          }
        });
  return out;
}

// ---------------------------------------------------------------- kernel

Entries kernel_suite(const VerifyConfig& cfg) {
  Entries out;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> X(-2.0, 2.0), Y(0.1, 2.0);

  check(out, "kernel.closed_form", "R_{0,-1/2}(z, zeta) = y / ((x - zeta)^2 + y^2)", 1e-12,
        [&](Recorder& r) {
          const RKernel K(0.0, -0.5);
          r.add(std::abs(r_eval(K, kI, 0.0) - 1.0));
          r.add(std::abs(r_eval(K, kI, 1.0) - 0.5));
          for (int i = 0; i < 100; ++i) {
            const cplx z(X(rng), Y(rng));
            const cplx zeta(X(rng), i % 2 ? Y(rng) : 0.0);
            if (zeta.imag() != 0.0 && std::abs(zeta.real() - z.real()) < 1e-3) continue;
            const cplx lz = 0.5 * kI * (1.0 / (z - zeta) - 1.0 / (std::conj(z) - zeta));
            r.add(rel(K.continued(z, zeta), lz));
          }
        });
  check(out, "kernel.real_zeta_form",
        "for real zeta, R = e^{-ik arg(zeta - z)} (y / ((zeta - z)(zeta - conj z)))^{1/2 - nu}",
        1e-13, [&](Recorder& r) {
          for (double k : {0.5, -1.5}) {
            const RKernel K(k, 0.2);
            for (cplx z : {cplx(1.0, 1.0), cplx(-0.3, 0.4), cplx(2.0, 3.0)}) {
              for (double zeta : {0.0, 0.5, -1.0}) {
                const cplx a = zeta - z, b = zeta - std::conj(z);
                const cplx alt = std::polar(1.0, -k * principal_arg(a)) *
                                 principal_pow(z.imag() / (a * b), 0.3);
                r.add(rel(r_eval(K, z, zeta), alt));
              }
            }
          }
        });

  const RKernel K(0.5, cplx(0.2, 0.3)), K12(-12.0, 5.5);
  check(out, "kernel.transform_real_mu",
        "R(gz, g zeta) = e^{ik arg mu(g,z)} mu(g,zeta)^{1-2nu} R(z, zeta) when mu(g, zeta) > 0",
        1e-11, [&](Recorder& r) {
          for (const RKernel* k : {&K, &K12}) {
            for (const GroupElement& g : {GroupElement::S(), GroupElement::T_prime()}) {
              for (double zeta : {0.5, 2.0, 3.7}) {
                for (cplx z : {kI, cplx(0.4, 0.7), cplx(-1.3, 2.2)}) {
                  r.add(r_transform_check(*k, g, z, zeta));
                }
              }
            }
          }
        });
  check(out, "kernel.transform_vertical_ray",
        "transformation law when gz lies on the vertical ray above g zeta", 1e-11,
        [&](Recorder& r) {
          for (const RKernel* k : {&K, &K12}) {
            for (const GroupElement& g : {GroupElement::S(), GroupElement::T_prime()}) {
              for (cplx zeta : {cplx(1.0, 1.0), cplx(0.5, 0.3), cplx(2.0, 0.5)}) {
                for (double t : {0.5, 2.0}) {
                  const cplx z = moebius(g.inverse(), moebius(g, zeta) + t * kI);
                  r.add(r_transform_check(*k, g, z, zeta));
                }
              }
            }
          }
        });
  check(out, "kernel.transform_conjugate_ray",
        "transformation law when g conj(z) lies on the vertical ray above g conj(zeta)", 1e-11,
        [&](Recorder& r) {
          for (const RKernel* k : {&K, &K12}) {
            for (const GroupElement& g : {GroupElement::S(), GroupElement::T_prime()}) {
              for (cplx zeta : {cplx(1.0, -1.0), cplx(0.5, -0.3), cplx(2.0, -0.5)}) {
                for (double t : {0.5, 2.0}) {
                  const cplx zbar =
                      moebius(g.inverse(), moebius(g, std::conj(zeta)) + t * kI);
                  r.add(r_transform_check(*k, g, std::conj(zbar), zeta));
                }
              }
            }
          }
        });

  // Random admissible (z, zeta) pairs in both half-planes for the kernel equations.
  struct Sample {
    double k;
    cplx nu, z, zeta;
  };
  std::vector<Sample> samples;
  {
    std::uniform_real_distribution<double> U(-1.5, 1.5), V(0.3, 2.0);
    for (double k : {0.5, -0.5, -12.0}) {
      const cplx nu = k == -12.0 ? cplx(5.5) : cplx(0.1, 0.35);
      for (int i = 0; i < 10; ++i) {
        const double s = i % 2 ? 1.0 : -1.0;
        samples.push_back({k, nu, cplx(U(rng), s * V(rng)), cplx(U(rng) + 3.0, 0.5 * V(rng))});
      }
    }
  }
  check(out, "kernel.laplace_equation", "Delta_k R_{k,nu} = (1/4 - nu^2) R_{k,nu} by differences",
        1e-5, [&](Recorder& r) {
          for (const Sample& s : samples) {
            const KernelOperand R(s.k, s.nu, s.zeta);
            const SampledFunction f = [&](cplx t) { return R.value(t); };
            const cplx v = R.value(s.z);
            r.add(std::abs(laplacian(f, s.k, s.z) - (0.25 - s.nu * s.nu) * v) / std::abs(v));
          }
        });
  check(out, "kernel.step_operators",
        "E^{+-}_k R_{k,nu} = (1 - 2nu +- k) R_{k+-2,nu}, closed form against differences", 1e-6,
        [&](Recorder& r) {
          for (const Sample& s : samples) {
            const KernelOperand R(s.k, s.nu, s.zeta);
            const SampledFunction f = [&](cplx t) { return R.value(t); };
            const FormSample fs = R.sample(s.k, s.z);
            r.add(rel(maass_raise(f, s.k, s.z), fs.raise));
            r.add(rel(maass_lower(f, s.k, s.z), fs.lower));
            // and the closed form against the shifted kernels
            const cplx up = (1.0 - 2.0 * s.nu + s.k) * KernelOperand(s.k + 2, s.nu, s.zeta).value(s.z);
            const cplx dn = (1.0 - 2.0 * s.nu - s.k) * KernelOperand(s.k - 2, s.nu, s.zeta).value(s.z);
            r.add(rel(fs.raise, up));
            r.add(rel(fs.lower, dn));
          }
        });
  check(out, "kernel.h_power_eigen", "E^{+-}_k y^{1/2-nu} = (1 - 2nu +- k) y^{1/2-nu}", 1e-6,
        [&](Recorder& r) {
          for (double k : {0.5, -1.5, 12.0}) {
            for (cplx nu : {cplx(0.3), cplx(0.1, 0.35)}) {
              const SampledFunction h = [&](cplx z) {
                return principal_pow(std::abs(z.imag()), 0.5 - nu);
              };
              for (cplx z : {kI, cplx(0.3, 1.7), cplx(-0.2, 0.4)}) {
                r.add(rel(maass_raise(h, k, z), (1.0 - 2.0 * nu + k) * h(z)));
                r.add(rel(maass_lower(h, k, z), (1.0 - 2.0 * nu - k) * h(z)));
              }
            }
          }
        });

  const MaassForm delta = delta_embedding(5.5, cfg.delta_terms);
  const MaassForm sur = default_surrogate(cfg.surrogate_terms);
  check(out, "kernel.delta_lower_vanishes",
        "E^-_12 of the Delta embedding is zero (expansion, relative to |u| + |E^+ u|)", 1e-10,
        [&](Recorder& r) {
          std::uniform_real_distribution<double> U(-1.0, 1.0), V(0.2, 2.0);
          for (int i = 0; i < 20; ++i) {
            const FormSample s = delta.sample(12.0, cplx(U(rng), V(rng)));
            r.add(std::abs(s.lower) / (std::abs(s.value) + std::abs(s.raise)));
          }
        });
  check(out, "kernel.delta_lower_differences",
        "E^-_12 of the Delta embedding by differences, relative to |E^+ u|", 1e-6,
        [&](Recorder& r) {
          const SampledFunction f = [&](cplx z) { return delta.value(z); };
          std::uniform_real_distribution<double> U(-1.0, 1.0), V(0.5, 2.0);
          for (int i = 0; i < 20; ++i) {
            const cplx z(U(rng), V(rng));
            r.add(std::abs(maass_lower(f, 12.0, z)) / std::abs(delta.sample(12.0, z).raise));
          }
        });
  const std::vector<cplx> op_points = {cplx(0.2, 0.9), cplx(-0.3, 0.6), cplx(0.45, 1.3)};
  check(out, "kernel.operator_product",
        "E^{+-}_{k-+2} E^{-+}_k u = -4 Delta_k u - k(k -+ 2) u for the surrogate", 1e-4,
        [&](Recorder& r) {
          const double k = sur.weight();
          const SampledFunction f = [&](cplx t) { return sur.value(t); };
          const SampledFunction lower = [&](cplx t) { return sur.sample(k, t).lower; };
          const SampledFunction raise = [&](cplx t) { return sur.sample(k, t).raise; };
          for (cplx z : op_points) {
            const cplx lap = laplacian(f, k, z), u = f(z);
            r.add(rel(maass_raise(lower, k - 2.0, z), -4.0 * lap - k * (k - 2.0) * u));
            r.add(rel(maass_lower(raise, k + 2.0, z), -4.0 * lap - k * (k + 2.0) * u));
          }
        });
  check(out, "kernel.operator_product_eigen",
        "E^{+-}_{k-+2} E^{-+}_k u = (1 + 2nu -+ k)(-1 + 2nu +- k) u for the surrogate", 1e-4,
        [&](Recorder& r) {
          const double k = sur.weight();
          const cplx nu = sur.nu();
          const SampledFunction lower = [&](cplx t) { return sur.sample(k, t).lower; };
          const SampledFunction raise = [&](cplx t) { return sur.sample(k, t).raise; };
          for (cplx z : op_points) {
            const cplx u = sur.value(z);
            r.add(rel(maass_raise(lower, k - 2.0, z), (1.0 + 2.0 * nu - k) * (-1.0 + 2.0 * nu + k) * u));
            r.add(rel(maass_lower(raise, k + 2.0, z), (1.0 + 2.0 * nu + k) * (-1.0 + 2.0 * nu - k) * u));
          }
        });
  check(out, "kernel.form_eigen_equation",
        "Delta_k u = (1/4 - nu^2) u by differences for the Delta embedding and the surrogate",
        1e-5, [&](Recorder& r) {
          std::uniform_real_distribution<double> U(-1.0, 1.0), V(0.3, 2.0);
          for (const MaassForm* u : {&delta, &sur}) {
            const SampledFunction f = [u](cplx z) { return u->value(z); };
            for (int i = 0; i < 10; ++i) {
              const cplx z(U(rng), V(rng));
              const cplx val = f(z);
              r.add(std::abs(laplacian(f, u->weight(), z) - u->eigenvalue() * val) / std::abs(val));
            }
          }
        });
  return out;
}

// ---------------------------------------------------------------- ms

Entries ms_suite(const VerifyConfig& cfg) {
  Entries out;
  const MaassForm delta = delta_embedding(5.5, cfg.delta_terms);

  check(out, "ms.constant_operands", "eta_0(1, 1) = 0", 1e-12, [](Recorder& r) {
    const FunctionOperand one([](cplx) { return cplx(1.0); });
    for (cplx z : {cplx(0.3, 0.8), cplx(-1.0, -2.0)}) {
      const OneFormSample w = eta_form(0.0, one, one, z);
      r.add(std::abs(w.A) + std::abs(w.B));
    }
  });
  check(out, "ms.sum_identity", "eta_k(f, g) + eta_{-k}(g, f) = 4i d(fg), componentwise", 1e-6,
        [](Recorder& r) {
          const FunctionOperand f([](cplx z) { return cplx(std::pow(std::abs(z.imag()), 0.3)); });
          const FunctionOperand g([](cplx z) { return cplx(std::pow(std::abs(z.imag()), 0.6)); });
          const SampledFunction fg = [&](cplx z) { return f.value(z) * g.value(z); };
          for (cplx z : {cplx(0.3, 1.1), cplx(0.3, -1.1)}) {
            const OneFormSample a = eta_form(0.5, f, g, z), b = eta_form(-0.5, g, f, z);
            r.add(rel(a.A + b.A, 4.0 * kI * d_dz(fg, z)));
            r.add(rel(a.B + b.B, 4.0 * kI * d_dzbar(fg, z)));
          }
          const KernelOperand R(-0.5, cplx(0.0, 0.35), cplx(0.2, 2.0));
          const FunctionOperand h(
              [](cplx z) { return std::exp(cplx(0, 2.0) * z) + 0.3 * z * std::conj(z); });
          const SampledFunction rh = [&](cplx z) { return R.value(z) * h.value(z); };
          for (cplx z : {cplx(0.5, 0.9), cplx(-0.4, 1.3)}) {
            const OneFormSample a = eta_form(0.5, h, R, z), b = eta_form(-0.5, R, h, z);
            r.add(rel(a.A + b.A, 4.0 * kI * d_dz(rh, z)));
            r.add(rel(a.B + b.B, 4.0 * kI * d_dzbar(rh, z)));
          }
        });
  check(out, "ms.symmetry",
        "eta_k(f, g)(z) = eta_k(g, f)(conj z) for f, g invariant under z -> conj z", 1e-6,
        [](Recorder& r) {
          const FunctionOperand f([](cplx z) { return cplx(std::pow(std::abs(z.imag()), 0.4)); });
          const FunctionOperand g(
              [](cplx z) { return cplx(std::pow(std::abs(z.imag()), 0.4)) * std::cos(z.real()); });
          for (const Operand* gg : {static_cast<const Operand*>(&f), static_cast<const Operand*>(&g)}) {
            for (cplx z : {cplx(0.2, 0.7), cplx(-0.6, 1.5)}) {
              const OneFormSample a = eta_form(0.5, f, *gg, z);
              const OneFormSample b = eta_form(0.5, *gg, f, std::conj(z));
              // conjugation exchanges dz and dzbar
              r.add(rel(b.B, a.A));
              r.add(rel(b.A, a.B));
            }
          }
        });
  check(out, "ms.combined_law",
        "eta_{-k}(R(., g zeta), u)|g = mu(g, zeta)^{1-2nu} eta_{-k}(R(., zeta), u)", 1e-8,
        [&](Recorder& r) {
          const double k = 12.0;
          const cplx nu = 5.5;
          const auto v = MultiplierSystem::trivial(k);
          for (const auto& [g, zeta] : {std::pair{GroupElement::S(), cplx(2.0)},
                                        std::pair{GroupElement::T_prime(), cplx(0.8)}}) {
            const KernelOperand at_gzeta(-k, nu, moebius(g, zeta)), at_zeta(-k, nu, zeta);
            const cplx factor = principal_pow(mu(g, zeta), 1.0 - 2.0 * nu);
            for (cplx z : {cplx(0.3, 0.8), cplx(-0.6, 1.2), cplx(1.1, 0.4)}) {
              const OneFormSample lhs =
                  slash_form(eta_form(-k, at_gzeta, delta, moebius(g, z)), g, z, v.evaluate(g));
              const OneFormSample base = eta_form(-k, at_zeta, delta, z);
              const double scale = std::abs(factor * base.A) + std::abs(factor * base.B);
              r.add(std::abs(lhs.A - factor * base.A) / scale);
              r.add(std::abs(lhs.B - factor * base.B) / scale);
            }
          }
        });
  check(out, "ms.slash_compatibility",
        "eta_k(f, g)|g' = eta_k(f|_k g', g|_{-k} g') for the Delta embedding, g' in {S, T}", 1e-6,
        [&](Recorder& r) {
          const double k = 12.0;
          const auto v = MultiplierSystem::trivial(k);
          const FunctionOperand g(
              [](cplx z) { return std::exp(cplx(0.0, -0.7) * z) * std::abs(z.imag()); });
          for (const GroupElement& gm : {GroupElement::S(), GroupElement::T()}) {
            const FunctionOperand us([&](cplx z) {
              return slash([&](cplx t) { return delta.value(t); }, k, v, gm)(z);
            });
            const FunctionOperand gs([&](cplx z) {
              return slash([&](cplx t) { return g.value(t); }, -k, v, gm)(z);
            });
            for (cplx z : {cplx(0.1, 1.1), cplx(-0.3, 0.9), cplx(0.45, 1.6)}) {
              const OneFormSample lhs =
                  slash_form(eta_form(k, delta, g, moebius(gm, z)), gm, z, v.evaluate(gm));
              const OneFormSample rhs = eta_form(k, us, gs, z);
              const double scale = std::abs(lhs.A) + std::abs(lhs.B);
              r.add(std::abs(lhs.A - rhs.A) / scale);
              r.add(std::abs(lhs.B - rhs.B) / scale);
            }
          }
        });
  check(out, "ms.closedness",
        "loop integral of eta_{-12}(R(., 3), u) around the rectangle 0.2+0.8i .. 0.6+1.6i, "
        "relative to one side",
        1e-8, [&](Recorder& r) {
          const FormField omega = [&](cplx z) {
            const KernelOperand R(-12.0, 5.5, 3.0);
            return eta_form(-12.0, R, delta, z);
          };
          QuadratureOptions opt = cfg.quadrature();
          opt.rel_tol = std::min(opt.rel_tol, 1e-11);
          const auto loop = integrate_form(
              omega,
              GeodesicPath::polyline({cplx(0.2, 0.8), cplx(0.6, 0.8), cplx(0.6, 1.6),
                                      cplx(0.2, 1.6), cplx(0.2, 0.8)}),
              opt);
          const auto side =
              integrate_form(omega, GeodesicPath::polyline({cplx(0.2, 0.8), cplx(0.6, 0.8)}), opt);
          r.add(std::abs(loop.value) / std::abs(side.value));
        });
  return out;
}

// ---------------------------------------------------------------- quad

Entries quad_suite(const VerifyConfig& cfg) {
  Entries out;
  QuadratureOptions opt = cfg.quadrature();
  opt.rel_tol = std::min(opt.rel_tol, 1e-12);

  check(out, "quad.closed_forms",
        "int_i^{2i} dz/y = i log 2 and int_i^{i inf} e^{2 pi i z} dz = i e^{-2pi}/(2pi)", 1e-12,
        [&](Recorder& r) {
          const auto a = integrate_form(
              [](cplx z) { return OneFormSample{1.0 / z.imag(), 0.0, z}; },
              GeodesicPath::geodesic(kI, 2.0 * kI), opt);
          r.add(rel(a.value, kI * std::log(2.0)));
          const auto b = integrate_dz([](cplx z) { return std::exp(2.0 * kPi * kI * z); },
                                      GeodesicPath::vertical_ray(kI, 1), opt);
          r.add(rel(b.value, kI * std::exp(-2.0 * kPi) / (2.0 * kPi)));
          const auto c = integrate_dz([](cplx z) { return z * z; }, GeodesicPath::geodesic(-1.0, 1.0),
                                      opt);
          r.add(rel(c.value, 2.0 / 3.0));
        });
  check(out, "quad.endpoint_singularity",
        "int (z - i)^alpha dz along vertical, arc and reversed paths for alpha in {-0.4, -0.2, 0}",
        1e-9, [&](Recorder& r) {
          QuadratureOptions o = opt;
          o.rel_tol = 1e-11;
          for (double alpha : {-0.4, -0.2, 0.0}) {
            const auto g = [alpha](cplx z) { return principal_pow(z - kI, alpha); };
            const auto vert = GeodesicPath::geodesic(kI, 2.0 * kI).with_exponents(alpha, 0.0);
            const cplx exact = principal_pow(kI, alpha + 1.0) / (alpha + 1.0);
            r.add(std::abs(integrate_dz(g, vert, o).value - exact));
            r.add(std::abs(integrate_dz(g, vert.reversed(), o).value + exact));
            const auto arc = GeodesicPath::geodesic(kI, 1.0).with_exponents(alpha, 0.0);
            const cplx exact_arc = principal_pow(cplx(1.0, -1.0), alpha + 1.0) / (alpha + 1.0);
            r.add(std::abs(integrate_dz(g, arc, o).value - exact_arc));
          }
        });
  check(out, "quad.path_independence",
        "a closed Maass-Selberg form integrates to the same value along a ray, a polyline and a "
        "split path",
        1e-8, [&](Recorder& r) {
          const MaassForm delta = delta_embedding(5.5, cfg.delta_terms);
          const FormField omega = [&](cplx z) {
            const KernelOperand R(-12.0, 5.5, 3.0);
            return eta_form(-12.0, R, delta, z);
          };
          QuadratureOptions o = opt;
          o.rel_tol = 1e-11;
          const auto ray = integrate_form(omega, GeodesicPath::vertical_ray(0.0, 1), o);
          const auto poly = integrate_form(
              omega,
              GeodesicPath::polyline(
                  {0.0, cplx(-0.5, 0.5), cplx(-0.5, 2.0), ExtendedComplex::infinity()}),
              o);
          const auto left =
              integrate_form(omega, GeodesicPath::geodesic(-1.0, ExtendedComplex::infinity()), o);
          const auto arc = integrate_form(omega, GeodesicPath::geodesic(0.0, -1.0), o);
          r.add(rel(poly.value, ray.value));
          r.add(rel(left.value + arc.value, ray.value));
        });
  check(out, "quad.error_estimate",
        "halving the tolerance moves the value by less than the previous error estimate", 0.0,
        [&](Recorder& r) {
          const MaassForm delta = delta_embedding(5.5, cfg.delta_terms);
          const FormField omega = [&](cplx z) {
            const KernelOperand R(-12.0, 5.5, 3.0);
            return eta_form(-12.0, R, delta, z);
          };
          const auto path = GeodesicPath::vertical_ray(0.0, 1);
          double t = 1e-6;
          auto prev = integrate_form(omega, path, t);
          for (int i = 0; i < 4; ++i) {
            t /= 2.0;
            const auto next = integrate_form(omega, path, t);
            r.add(std::max(0.0, std::abs(next.value - prev.value) - prev.abs_error_estimate - 1e-15));
            prev = next;
          }
        });
  return out;
}

// ---------------------------------------------------------------- periods

cplx synthetic_f(cplx z) {
  return z.imag() > 0.0 ? std::exp(2.0 * kPi * kI * z) : std::exp(-2.0 * kPi * kI * z);
}

std::vector<cplx> half_plane_points(double sign) {
  std::vector<cplx> z;
  for (int j = 0; j < 10; ++j) z.emplace_back(-1.3 + 0.31 * j, sign * (0.35 + 0.17 * j));
  return z;
}

Entries periods_suite(const VerifyConfig& cfg) {
  Entries out;
  const QuadratureOptions opt = cfg.quadrature();
  const MaassForm sur = default_surrogate(cfg.surrogate_terms);
  const NearlyPeriodicFunction f(sur, opt);
  const PeriodFunction P(sur, opt);
  const cplx vT = sur.multiplier().v_T();
  const PeriodData sd{sur.weight(), sur.nu(), sur.multiplier()};

  auto near_periodic = [&](double sign) {
    return [&, sign](Recorder& r) {
      for (cplx z : {cplx(0.3, 1.1), cplx(-0.1, 0.6), cplx(0.45, 0.8), cplx(0.2, 1.5),
                     cplx(-0.35, 0.45)}) {
        const cplx w(z.real(), sign * z.imag());
        const cplx fz = f(w).value;
        r.add(std::abs(f(w + 1.0).value / vT - fz) / std::abs(fz));
      }
    };
  };
  check(out, "periods.near_periodicity_upper",
        "surrogate f: v(T)^{-1} f(zeta + 1) = f(zeta), Im zeta > 0", 1e-6, near_periodic(1.0));
  check(out, "periods.near_periodicity_lower",
        "surrogate f: v(T)^{-1} f(zeta + 1) = f(zeta), Im zeta < 0", 1e-6, near_periodic(-1.0));
  check(out, "periods.lower_routes", "both lower half-plane expressions for f agree", 1e-8,
        [&](Recorder& r) {
          for (cplx z : {cplx(0.4, -1.2), cplx(-0.2, -0.6)}) {
            const cplx a = f(z).value;
            r.add(rel(f.lower_via_conjugate(z).value, a));
          }
        });

  const PeriodData syn{0.0, cplx(0.0, 0.3), MultiplierSystem::trivial(0.0)};
  const Evaluatable synP = [&](cplx z) { return f_to_P(synthetic_f, syn, z); };
  check(out, "periods.three_term_synthetic",
        "P = f - f|S from a periodic f satisfies P = P|T + P|T' (10 points per half-plane, "
        "relative to |P| + |f|)",
        1e-9, [&](Recorder& r) {
          for (double s : {1.0, -1.0}) {
            for (cplx z : half_plane_points(s)) {
              r.add(std::abs(three_term_residual(synP, syn, z)) /
                    (std::abs(synP(z)) + std::abs(synthetic_f(z))));
            }
          }
        });
  check(out, "periods.three_term_synthetic_grid",
        "three-term residual of the synthetic P at x +- 0.8i for x in {0.5, 1, 2, 4}, relative",
        1e-7, [&](Recorder& r) {
          for (double x : {0.5, 1.0, 2.0, 4.0}) {
            for (double s : {1.0, -1.0}) {
              const cplx z(x, 0.8 * s);
              r.add(std::abs(three_term_residual(synP, syn, z)) / std::abs(synP(z)));
            }
          }
        });
  check(out, "periods.roundtrip_f",
        "P + P|S applied to P = f - f|S returns c+- f (10 points per half-plane)", 1e-9,
        [&](Recorder& r) {
          const BijectionConstants c(syn.k, syn.nu);
          for (double s : {1.0, -1.0}) {
            for (cplx z : half_plane_points(s)) {
              const double scale = std::abs(synP(z)) + std::abs(synthetic_f(z));
              r.add(std::abs(P_to_cf(synP, syn, z) - c.for_point(z) * synthetic_f(z)) / scale);
              r.add(std::abs(P_to_f(synP, syn, z) - synthetic_f(z)) / scale);
            }
          }
        });
  check(out, "periods.roundtrip_P",
        "f - f|S applied to f = P + P|S returns c+- P (10 points per half-plane)", 1e-9,
        [&](Recorder& r) {
          const BijectionConstants c(syn.k, syn.nu);
          const Evaluatable cf = [&](cplx w) { return P_to_cf(synP, syn, w); };
          for (double s : {1.0, -1.0}) {
            for (cplx z : half_plane_points(s)) {
              const double scale = std::abs(synP(z)) + std::abs(synthetic_f(z));
              r.add(std::abs(f_to_P(cf, syn, z) - c.for_point(z) * synP(z)) / scale);
            }
          }
        });
  check(out, "periods.bijection_constants",
        "c+- = 2 at k = 0, nu = 0; degenerate pairs (k = 0, nu = 1/2) and (12, 11/2) are rejected",
        1e-15, [](Recorder& r) {
          const BijectionConstants c(0.0, 0.0);
          r.add(std::abs(c.c_plus() - 2.0));
          r.add(std::abs(c.c_minus() - 2.0));
          for (const auto& [k, nu] : {std::pair{0.0, 0.5}, std::pair{12.0, 5.5}}) {
            bool rejected = false;
            try {
              BijectionConstants bad(k, nu);
            } catch (const DegenerateBijection&) {
              rejected = true;
            }
            r.add(rejected ? 0.0 : 1.0);
          }
        });
  check(out, "periods.compatibility_surrogate",
        "surrogate: P(zeta) = f(zeta) - (f|S)(zeta) at 6 points with Re zeta > 0", 1e-6,
        [&](Recorder& r) {
          const Evaluatable fe = [&](cplx z) { return f(z).value; };
          for (cplx z : {cplx(0.6, 0.9), cplx(1.2, 0.4), cplx(0.3, 1.5), cplx(0.6, -0.9),
                         cplx(1.2, -0.4), cplx(0.3, -1.5)}) {
            const cplx p = P(z).value;
            r.add(rel(f_to_P(fe, sd, z), p));
          }
        });

  const MaassForm delta = delta_embedding(5.5, cfg.delta_terms);
  const NearlyPeriodicFunction df(delta, opt);
  const PeriodFunction dP(delta, opt);
  const auto trivial = MultiplierSystem::trivial(12.0);
  const PeriodData dd{12.0, cplx(5.5), trivial};
  check(out, "periods.compatibility_delta",
        "Delta embedding: P(zeta) = f(zeta) - (f|S)(zeta)", 1e-7, [&](Recorder& r) {
          const Evaluatable fe = [&](cplx z) { return df(z).value; };
          for (cplx z : {cplx(0.6, 0.9), cplx(1.4, -0.5), cplx(0.3, 1.2)}) {
            r.add(rel(f_to_P(fe, dd, z), dP(z).value));
          }
        });
  check(out, "periods.f_slash_T_prime",
        "(f|T')(zeta) = integral from zeta to -1 (Delta embedding, Re(zeta + 1) > 0)", 1e-7,
        [&](Recorder& r) {
          const SampledFunction fe = [&](cplx z) { return df(z).value; };
          const auto fT = dslash(fe, 5.5, trivial, GroupElement::T_prime());
          for (cplx z : {cplx(0.3, 1.1), cplx(-0.4, 0.7)}) {
            r.add(rel(df.integral_to(z, ExtendedComplex(-1.0)).value, fT(z)));
          }
        });
  check(out, "periods.P_slash_geodesic",
        "(P|g)(zeta) = integral over the geodesic from g^{-1} 0 to g^{-1} inf, g in {T, T'}", 1e-8,
        [&](Recorder& r) {
          const SampledFunction Pe = [&](cplx z) { return dP(z).value; };
          const auto PT = dslash(Pe, 5.5, trivial, GroupElement::T());
          const auto PTp = dslash(Pe, 5.5, trivial, GroupElement::T_prime());
          const auto to_inf = GeodesicPath::geodesic(-1.0, ExtendedComplex::infinity());
          const auto arc = GeodesicPath::geodesic(0.0, -1.0);
          for (double x : {0.5, 1.0, 2.0}) {
            r.add(rel(dP.integral_along(x, to_inf).value, PT(x)));
            r.add(rel(dP.integral_along(x, arc).value, PTp(x)));
          }
        });
  check(out, "periods.pairing_order",
        "int eta_{-k}(R, u) = -int eta_k(u, R) along the P contour", 1e-8, [&](Recorder& r) {
          for (cplx z : {cplx(1.0, 0.5), cplx(0.5), cplx(-0.5, 0.7)}) {
            r.add(rel(dP.swapped(z).value, dP(z).value));
          }
          r.add(rel(P.swapped(cplx(0.6, 0.9)).value, P(cplx(0.6, 0.9)).value));
        });
  check(out, "periods.holomorphy",
        "Cauchy-Riemann residual of P by differences (step 1e-3), relative to |P'| + |P|", 1e-6,
        [&](Recorder& r) {
          QuadratureOptions tight = opt;
          tight.rel_tol = std::min(tight.rel_tol, 1e-12);
          const PeriodFunction Pt(sur, tight);
          const double h = 1e-3;
          for (const PeriodFunction* Pf : {&dP, &Pt}) {
            const SampledFunction at = [&](cplx w) { return (*Pf)(w).value; };
            for (cplx z : {cplx(1.0, 0.5), cplx(-0.5, 0.7), cplx(0.3, -0.4)}) {
              const cplx dx = diff(at, z, h), dy = diff(at, z, kI * h);
              r.add(std::abs(dx - dy) / (std::abs(dx) + std::abs(at(z))));
            }
          }
        });
  check(out, "periods.linearity", "f and P of a u1 + b u2 equal a f(u1) + b f(u2), a P(u1) + b P(u2)",
        1e-10, [&](Recorder& r) {
          const auto v = MultiplierSystem::eta_power(0.5);
          const auto u1 = MaassForm::whittaker_surrogate(0.5, v, cplx(0.0, 0.35), {1.0, 0.0, 0.5}, {0.5});
          const auto u2 =
              MaassForm::whittaker_surrogate(0.5, v, cplx(0.0, 0.35), {0.0, 2.0, 0.0, -1.0}, {0.0, 1.0});
          const cplx s(0.7, -0.2), t(-1.5, 0.4);
          const auto mix = u1.combine(s, u2, t);
          QuadratureOptions o = opt;
          o.rel_tol = 1e-13;
          for (cplx z : {cplx(0.3, 1.1), cplx(0.4, -0.8)}) {
            const cplx lhs = NearlyPeriodicFunction(mix, o)(z).value;
            r.add(rel(s * NearlyPeriodicFunction(u1, o)(z).value +
                          t * NearlyPeriodicFunction(u2, o)(z).value,
                      lhs));
          }
          const cplx z(0.8, 0.3);
          const cplx lhs = PeriodFunction(mix, o)(z).value;
          r.add(rel(s * PeriodFunction(u1, o)(z).value + t * PeriodFunction(u2, o)(z).value, lhs));
        });
  return out;
}

// ---------------------------------------------------------------- classical

Entries classical_suite(const VerifyConfig& cfg) {
  Entries out;
  const QuadratureOptions opt = cfg.quadrature();
  const HolomorphicCuspForm uh = delta_cusp_form(cfg.delta_terms);
  const auto p = [&](cplx z) { return eichler_polynomial(uh, z, opt).value; };
  const PeriodFunction P(delta_embedding(5.5, cfg.delta_terms), opt);
  const PeriodFunction P0(delta_embedding(-5.5, cfg.delta_terms), opt);

  std::vector<cplx> pts;
  for (int j = 0; j < 10; ++j) pts.emplace_back(0.4 + 0.2 * j, 0.6 - 0.1 * j);

  check(out, "classical.period_poly_s_relation", "p(zeta) + zeta^10 p(-1/zeta) = 0 (10 points)",
        1e-7, [&](Recorder& r) {
          for (cplx z : pts) {
            const cplx a = p(z), b = std::pow(z, 10) * p(-1.0 / z);
            r.add(std::abs(a + b) / (std::abs(a) + std::abs(b)));
          }
        });
  check(out, "classical.period_poly_u_relation",
        "p(zeta) + (zeta+1)^10 p(-1/(zeta+1)) + zeta^10 p(-(zeta+1)/zeta) = 0 (10 points)", 1e-7,
        [&](Recorder& r) {
          for (cplx z : pts) {
            const cplx a = p(z), b = std::pow(z + 1.0, 10) * p(-1.0 / (z + 1.0)),
                       c = std::pow(z, 10) * p(-(z + 1.0) / z);
            r.add(std::abs(a + b + c) / (std::abs(a) + std::abs(b) + std::abs(c)));
          }
        });
  check(out, "classical.period_poly_degree",
        "degree-10 interpolation through 11 Chebyshev nodes on [1, 2] predicts p(3)", 1e-8,
        [&](Recorder& r) {
          QuadratureOptions tight = opt;
          tight.rel_tol = std::min(tight.rel_tol, 1e-13);
          const auto pt = [&](double x) { return eichler_polynomial(uh, x, tight).value; };
          std::vector<double> x;
          std::vector<cplx> y;
          for (int j = 0; j < 11; ++j) {
            x.push_back(1.5 + 0.5 * std::cos(kPi * (j + 0.5) / 11.0));
            y.push_back(pt(x.back()));
          }
          cplx predicted = 0.0;
          for (std::size_t j = 0; j < x.size(); ++j) {
            double w = 1.0;
            for (std::size_t m = 0; m < x.size(); ++m) {
              if (m != j) w *= (3.0 - x[m]) / (x[j] - x[m]);
            }
            predicted += w * y[j];
          }
          r.add(rel(predicted, pt(3.0)));
        });
  const std::vector<cplx> golden = {0.5, 1.0, 2.0, cplx(1.0, 0.5), cplx(1.0, -0.5)};
  check(out, "classical.P_equals_minus_22p",
        "P_{12,11/2}(zeta) = -22 p(zeta), residual / (1 + |p|)", 1e-7, [&](Recorder& r) {
          for (cplx z : golden) {
            const cplx pz = p(z);
            r.add(std::abs(P(z).value + 22.0 * pz) / (1.0 + std::abs(pz)));
          }
        });
  check(out, "classical.P_vanishes", "P_{12,-11/2}(zeta) = 0, |P| / (1 + |p|)", 1e-8,
        [&](Recorder& r) {
          for (cplx z : golden) r.add(std::abs(P0(z).value) / (1.0 + std::abs(p(z))));
        });
  check(out, "classical.f_equals_minus_22fh", "f_{12,11/2}(zeta) = -22 f_h(zeta)", 1e-7,
        [&](Recorder& r) {
          const NearlyPeriodicFunction f(delta_embedding(5.5, cfg.delta_terms), opt);
          for (cplx z : {cplx(0.5, 1.0), cplx(0.2, 0.7), cplx(-0.3, 1.4)}) {
            const cplx fh = eichler_f(uh, z, opt).value;
            r.add(rel(f(z).value, -22.0 * fh));
          }
        });
  const std::vector<cplx> fh_pts = {cplx(0.3, 1.3), cplx(-0.2, 0.8), cplx(0.45, 0.6),
                                    cplx(1.7, 1.1), cplx(0.1, 2.0)};
  check(out, "classical.eichler_periodicity", "f_h(zeta + 1) = f_h(zeta) (5 points)", 1e-8,
        [&](Recorder& r) {
          for (cplx z : fh_pts) {
            const cplx a = eichler_f(uh, z, opt).value;
            r.add(rel(eichler_f(uh, z + 1.0, opt).value, a));
          }
        });
  check(out, "classical.eichler_cocycle", "f_h(zeta) - zeta^10 f_h(-1/zeta) = p(zeta) (5 points)",
        1e-7, [&](Recorder& r) {
          for (cplx z : fh_pts) {
            const cplx c = eichler_f(uh, z, opt).value - std::pow(z, 10) * eichler_f(uh, -1.0 / z, opt).value;
            r.add(rel(c, p(z)));
          }
        });
  check(out, "classical.three_term_delta",
        "P = P|T + P|T' for the Delta period function at {0.5, 1, 2, 4}, relative to the terms",
        1e-7, [&](Recorder& r) {
          const PeriodData d{12.0, cplx(5.5), MultiplierSystem::trivial(12.0)};
          const Evaluatable Pe = [&](cplx z) { return P(z).value; };
          for (double x : {0.5, 1.0, 2.0, 4.0}) {
            const double scale = std::abs(Pe(x)) + std::abs(Pe(x + 1.0)) +
                                 std::pow(x + 1.0, 10) * std::abs(Pe(x / (x + 1.0)));
            r.add(std::abs(three_term_residual(Pe, d, x)) / scale);
          }
        });
  return out;
}

using SuiteFn = Entries (*)(const VerifyConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"branch", branch_suite}, {"group", group_suite},     {"multiplier", multiplier_suite},
      {"kernel", kernel_suite}, {"ms", ms_suite},           {"quad", quad_suite},
      {"periods", periods_suite}, {"classical", classical_suite}};
  return s;
}

}  // namespace

bool VerificationReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const IdentityCheck& c) { return c.pass; });
}

QuadratureOptions VerifyConfig::quadrature() const {
  QuadratureOptions o;
  o.rel_tol = quad_rel_tol;
  o.cusp_height = cusp_height;
  return o;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suites()) n.push_back(name);
    return n;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = name;
  bool found = false;
  for (const auto& [n, fn] : suites()) {
    if (name != "all" && name != n) continue;
    found = true;
    auto e = fn(cfg);
    report.entries.insert(report.entries.end(), e.begin(), e.end());
  }
  if (!found) throw UnsupportedParameter("unknown suite '" + name + "'");
  for (IdentityCheck& c : report.entries) {
    const auto it = cfg.tolerances.find(c.id);
    if (it == cfg.tolerances.end()) continue;
    c.tolerance = it->second;
    c.pass = c.note.empty() && c.points > 0 && c.max_residual <= c.tolerance;
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const IdentityCheck& a, const IdentityCheck& b) { return a.id < b.id; });
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

MaassForm default_surrogate(std::size_t terms) {
  std::vector<cplx> a;
  for (std::size_t n = 1; n <= terms; ++n) a.push_back(1.0 / static_cast<double>(n));
  return MaassForm::whittaker_surrogate(0.5, MultiplierSystem::eta_power(0.5), cplx(0.0, 0.35), a,
                                        a);
}

GrowthTable growth_table(const VerifyConfig& cfg) {
  QuadratureOptions o = cfg.quadrature();
  // Growth only needs the size of P; a looser tolerance keeps the 16-point scan fast.
  o.rel_tol = std::max(o.rel_tol, 1e-8);
  return {growth_check(PeriodFunction(delta_embedding(5.5, cfg.delta_terms), o)),
          growth_check(PeriodFunction(default_surrogate(cfg.surrogate_terms), o))};
}

}  // namespace maass
