#include "maass/quadrature.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "maass/gauss_kronrod.hpp"

namespace maass {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string point_string(const ExtendedComplex& p) {
  if (p.is_infinite()) return "inf";
  std::ostringstream os;
  os.precision(6);
  const cplx v = p.value();
  os << v.real();
  if (v.imag() != 0.0) os << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
  return os.str();
}

void check_in_half_plane(const ExtendedComplex& p, int half_plane) {
  if (p.is_infinite()) return;
  const double y = p.value().imag();
  if (y * half_plane < 0.0) {
    throw DomainError("path point " + point_string(p) + " is not in the closed half-plane");
  }
}

// One smooth parametrization u -> (z, dz/du) on an increasing interval,
// either end possibly infinite.
struct Param {
  std::function<std::pair<cplx, cplx>(double)> at;
  std::function<cplx(double, double)> diff;  // z(ref + du) - z(ref), accurate for small du
  double u0 = 0.0, u1 = 0.0;
  double a0 = 0.0, a1 = 0.0;  // singular exponents at finite ends
  bool cusp0 = false, cusp1 = false;  // the infinite end is the cusp at i*inf
};

// z = x + i s e^u on a vertical line; s = +-1 chooses the half-plane, and
// dir = -1 runs the line downward.
Param vertical(double x, int s, double y_from, double y_to) {
  const int dir = (y_to > y_from) ? 1 : -1;
  auto lg = [](double y) { return y == 0.0 ? -kInf : (std::isinf(y) ? kInf : std::log(y)); };
  Param p;
  p.at = [x, s, dir](double u) {
    const double e = std::exp(dir * u);
    return std::make_pair(cplx(x, s * e), cplx(0.0, s * dir * e));
  };
  p.diff = [s, dir](double ref, double du) {
    return cplx(0.0, s * std::exp(dir * ref) * std::expm1(dir * du));
  };
  p.u0 = dir * lg(y_from);
  p.u1 = dir * lg(y_to);
  p.cusp1 = std::isinf(y_to);
  p.cusp0 = std::isinf(y_from);
  return p;
}

// z = c + r tanh t + i s r sech t, with t(x + iy) = asinh((x - c)/|y|).
Param semicircle(double c, double r, int s, double t_from, double t_to) {
  const int dir = (t_to > t_from) ? 1 : -1;
  Param p;
  p.at = [c, r, s, dir](double u) {
    const double t = dir * u;
    const double th = std::tanh(t), sh = 1.0 / std::cosh(t);
    return std::make_pair(cplx(c + r * th, s * r * sh),
                          cplx(dir * r * sh * sh, -dir * s * r * sh * th));
  };
  p.diff = [r, s, dir](double ref, double du) {
    const double t0 = dir * ref, dt = dir * du, t = t0 + dt;
    const double cc = std::cosh(t) * std::cosh(t0);
    return cplx(r * std::sinh(dt) / cc,
                -s * 2.0 * r * std::sinh(t0 + 0.5 * dt) * std::sinh(0.5 * dt) / cc);
  };
  p.u0 = dir * t_from;
  p.u1 = dir * t_to;
  return p;
}

double arc_parameter(double c, const cplx& z) {
  if (z.imag() == 0.0) return z.real() > c ? kInf : -kInf;
  return std::asinh((z.real() - c) / std::abs(z.imag()));
}

// Straight segment a -> b; a real start uses z = a + (b - a) e^u.
Param segment(cplx a, cplx b) {
  Param p;
  if (a.imag() == 0.0 && b.imag() != 0.0) {
    p.at = [a, b](double u) {
      const double e = std::exp(u);
      return std::make_pair(a + (b - a) * e, (b - a) * e);
    };
    p.diff = [a, b](double ref, double du) { return (b - a) * std::exp(ref) * std::expm1(du); };
    p.u0 = -kInf;
    p.u1 = 0.0;
  } else {
    p.at = [a, b](double u) { return std::make_pair(a + (b - a) * u, b - a); };
    p.diff = [a, b](double, double du) { return (b - a) * du; };
    p.u0 = 0.0;
    p.u1 = 1.0;
  }
  return p;
}

Param geodesic_param(const ExtendedComplex& from, const ExtendedComplex& to, int s) {
  if (from.is_infinite() && to.is_infinite()) {
    throw DomainError("geodesic endpoints coincide");
  }
  if (from.is_infinite()) {
    const cplx q = to.value();
    return vertical(q.real(), s, kInf, std::abs(q.imag()));
  }
  if (to.is_infinite()) {
    const cplx p = from.value();
    return vertical(p.real(), s, std::abs(p.imag()), kInf);
  }
  const cplx p = from.value(), q = to.value();
  if (p == q) throw DomainError("geodesic endpoints coincide");
  const double dx = p.real() - q.real();
  const double scale = std::max({1.0, std::abs(p), std::abs(q)});
  if (std::abs(dx) <= 1e-14 * scale) {
    if (p.imag() == 0.0 && q.imag() == 0.0) throw DomainError("geodesic endpoints coincide");
    return vertical(p.real(), s, std::abs(p.imag()), std::abs(q.imag()));
  }
  const double c = (std::norm(p) - std::norm(q)) / (2.0 * dx);
  const double r = std::abs(p - c);
  return semicircle(c, r, s, arc_parameter(c, p), arc_parameter(c, q));
}

struct Accumulator {
  cplx total{};
  double error = 0.0;
  double tail = 0.0;
  double ymax = 0.0;
  double scale = 0.0;  // sum of |piece values|
  std::size_t evals = 0;
  QuadratureOptions opt;

  double target() const { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); }

  template <class H>
  GKResult<cplx> run(H&& h, double a, double b) {
    GKOptions go;
    go.rel_tol = opt.rel_tol;
    go.abs_tol = std::max(opt.abs_tol, 0.1 * opt.rel_tol * std::abs(total));
    if (evals >= opt.max_evals) {
      throw NonConvergence("path quadrature: evaluation budget exhausted", total, error);
    }
    go.max_evals = opt.max_evals - evals;
    try {
      auto r = integrate_gk(h, a, b, go);
      evals += r.evaluations;
      return r;
    } catch (const NonConvergence& e) {
      throw NonConvergence(e.what(), total + e.partial_value(), error + e.error_estimate());
    }
  }
};

using Pullback = std::function<cplx(const PathPoint&, cplx)>;

void integrate_param(const Param& P, const Pullback& g, Accumulator& acc) {
  auto eval = [&](const PathPoint& pt, cplx dz) {
    const cplx v = g(pt, dz);
    const cplx z = pt.z;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream os;
      os << "integrand not finite at z = " << z;
      throw NonConvergence(os.str(), acc.total, acc.error);
    }
    return v;
  };
  auto h = [&](double u) {
    const auto [z, dz] = P.at(u);
    return eval(PathPoint::at(z), dz);
  };
  auto add = [&](const GKResult<cplx>& r) {
    acc.total += r.value;
    acc.scale += std::abs(r.value);
    acc.error += r.error;
  };

  const bool f0 = std::isfinite(P.u0), f1 = std::isfinite(P.u1);
  double c0, c1;
  if (f0 && f1) {
    c0 = P.u0;
    c1 = P.u1;
  } else if (f0) {
    c0 = P.u0;
    c1 = P.u0 + 1.0;
  } else if (f1) {
    c0 = P.u1 - 1.0;
    c1 = P.u1;
  } else {
    c0 = -1.0;
    c1 = 1.0;
  }

  // Core interval, with power substitutions at singular finite ends.
  const bool s0 = f0 && P.a0 < 0.0, s1 = f1 && P.a1 < 0.0;
  const double delta = std::min(1.0, (c1 - c0) / ((s0 && s1) ? 3.0 : 2.0));
  double lo = c0, hi = c1;
  // u = end + side * delta * t^p, with the integrand told the exact offset
  // from the endpoint.
  auto singular_end = [&](double end, double alpha, double side) {
    const double p = 1.0 / (1.0 + alpha);
    const cplx z_end = P.at(end).first;
    add(acc.run(
        [&](double t) {
          const double v = delta * std::pow(t, p);
          const double u = end + side * v;
          const cplx off = P.diff(end, side * v);
          if (off == cplx(0.0)) return cplx(0.0);
          const cplx dz = P.at(u).second;
          return eval(PathPoint{z_end + off, z_end, off}, dz) * (delta * p * std::pow(t, p - 1.0));
        },
        0.0, 1.0));
  };
  if (s0) {
    singular_end(c0, P.a0, 1.0);
    lo = c0 + delta;
  }
  if (s1) {
    singular_end(c1, P.a1, -1.0);
    hi = c1 - delta;
  }
  if (hi > lo) add(acc.run(h, lo, hi));

  // Open ends: chunks of growing length until the contribution is negligible
  // and, toward the cusp at infinity, the cusp height has been passed.
  auto extend = [&](double start, int dir, bool cusp) {
    double a = start, len = 1.0;
    int quiet = 0;
    for (int chunk = 0; chunk < 80; ++chunk) {
      const double b = a + dir * len;
      auto r = dir > 0 ? acc.run(h, a, b) : acc.run(h, b, a);
      add(r);
      const double edge = std::abs(h(b)) * len;
      const double ylevel = std::abs(P.at(b).first.imag());
      if (cusp) acc.ymax = std::max(acc.ymax, ylevel);
      const double small = 0.1 * acc.target();
      const bool negligible = std::abs(r.value) + r.error <= small && edge <= small;
      quiet = negligible ? quiet + 1 : 0;
      if (quiet >= 2 && (!cusp || ylevel >= acc.opt.cusp_height)) {
        acc.tail += std::abs(r.value) + edge;
        acc.error += std::abs(r.value) + edge;
        return;
      }
      a = b;
      len = std::min(2.0 * len, cusp ? 0.5 : 16.0);
    }
    throw NonConvergence("path quadrature: integrand does not decay toward an open end", acc.total,
                         acc.error);
  };
  if (!f1) extend(c1, +1, P.cusp1);
  if (!f0) extend(c0, -1, P.cusp0);
}

std::vector<Param> params_of(const GeodesicPath& path) {
  const int s = path.half_plane();
  const auto& pts = path.points();
  std::vector<Param> out;
  if (path.kind() == GeodesicPath::Kind::vertical_ray || path.kind() == GeodesicPath::Kind::arc) {
    out.push_back(geodesic_param(pts.front(), pts.back(), s));
  } else if (path.kind() == GeodesicPath::Kind::geodesic_chain) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) out.push_back(geodesic_param(pts[i], pts[i + 1], s));
  } else {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (pts[i].is_infinite()) throw DomainError("polyline: only the last vertex may be infinite");
      if (pts[i + 1].is_infinite()) {
        out.push_back(geodesic_param(pts[i], pts[i + 1], s));
      } else {
        out.push_back(segment(pts[i].value(), pts[i + 1].value()));
      }
    }
  }
  const double a0 = path.start_exponent(), a1 = path.end_exponent();
  if (a0 <= -1.0 || a1 <= -1.0) {
    throw DivergentIntegral("endpoint singularity exponent <= -1");
  }
  if (!pts.front().is_infinite() && pts.front().value().imag() != 0.0) out.front().a0 = a0;
  if (!pts.back().is_infinite() && pts.back().value().imag() != 0.0) out.back().a1 = a1;
  return out;
}

QuadratureResult integrate_pullback(const Pullback& g,
                                    const GeodesicPath& path, const QuadratureOptions& opt) {
  const auto params = params_of(path);
  auto once = [&](const QuadratureOptions& o) {
    Accumulator acc;
    acc.opt = o;
    for (const auto& P : params) integrate_param(P, g, acc);
    return acc;
  };
  Accumulator acc = once(opt);
  if (acc.error > std::max(opt.abs_tol, opt.rel_tol * std::abs(acc.total)) &&
      std::abs(acc.total) > opt.rel_tol * acc.scale) {
    // Cancellation between pieces: try again with the final size as the
    // absolute scale. When the pieces cancel completely (closed loops) the
    // goal is relative to the summed size of the pieces instead.
    QuadratureOptions o = opt;
    o.abs_tol = std::max(opt.abs_tol, 0.02 * opt.rel_tol * std::abs(acc.total));
    o.rel_tol = 0.05 * opt.rel_tol * std::abs(acc.total) / std::max(acc.scale, std::abs(acc.total));
    const std::size_t used = acc.evals;
    o.max_evals = std::min(opt.max_evals > used ? opt.max_evals - used : 0, 50 * used);
    try {
      Accumulator again = once(o);
      again.evals += used;
      acc = again;
    } catch (const NonConvergence&) {
    }
  }
  if (acc.error > std::max(opt.abs_tol, opt.rel_tol * std::max(std::abs(acc.total), acc.scale))) {
    throw NonConvergence("path quadrature: error estimate above tolerance", acc.total, acc.error);
  }
  QuadratureResult r;
  r.value = acc.total;
  r.abs_error_estimate = acc.error;
  r.evaluations = acc.evals;
  r.cusp_height = acc.ymax;
  r.tail_bound = acc.tail;
  return r;
}

}  // namespace

GeodesicPath GeodesicPath::vertical_ray(cplx base, int direction) {
  if (direction != 1 && direction != -1) throw DomainError("vertical_ray: direction must be +-1");
  if (base.imag() * direction < 0.0) {
    throw DomainError("vertical_ray: base is not in the half-plane of the ray");
  }
  GeodesicPath p;
  p.kind_ = Kind::vertical_ray;
  p.half_plane_ = direction;
  p.points_ = {ExtendedComplex(base), ExtendedComplex::infinity()};
  return p;
}

GeodesicPath GeodesicPath::geodesic(ExtendedComplex from, ExtendedComplex to, int half_plane) {
  if (half_plane != 1 && half_plane != -1) throw DomainError("half_plane must be +-1");
  check_in_half_plane(from, half_plane);
  check_in_half_plane(to, half_plane);
  if (from == to) throw DomainError("geodesic endpoints coincide");
  GeodesicPath p;
  p.kind_ = (from.is_infinite() || to.is_infinite()) ? Kind::vertical_ray : Kind::arc;
  p.half_plane_ = half_plane;
  p.points_ = {from, to};
  return p;
}

GeodesicPath GeodesicPath::polyline(std::vector<ExtendedComplex> vertices, int half_plane) {
  if (half_plane != 1 && half_plane != -1) throw DomainError("half_plane must be +-1");
  if (vertices.size() < 2) throw DomainError("polyline needs at least two vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_in_half_plane(vertices[i], half_plane);
    if (vertices[i].is_infinite() && i + 1 != vertices.size()) {
      throw DomainError("polyline: only the last vertex may be infinite");
    }
    if (i > 0 && vertices[i] == vertices[i - 1]) throw DomainError("polyline: repeated vertex");
  }
  GeodesicPath p;
  p.kind_ = Kind::polyline;
  p.half_plane_ = half_plane;
  p.points_ = std::move(vertices);
  return p;
}

GeodesicPath GeodesicPath::geodesic_chain(std::vector<ExtendedComplex> vertices, int half_plane) {
  GeodesicPath p = polyline(std::move(vertices), half_plane);
  p.kind_ = Kind::geodesic_chain;
  return p;
}

GeodesicPath GeodesicPath::reversed() const {
  if ((kind_ == Kind::polyline || kind_ == Kind::geodesic_chain) && points_.back().is_infinite()) {
    throw UnsupportedParameter("polyline ending at infinity cannot be reversed");
  }
  GeodesicPath p = *this;
  std::reverse(p.points_.begin(), p.points_.end());
  std::swap(p.start_exponent_, p.end_exponent_);
  return p;
}

GeodesicPath GeodesicPath::with_exponents(double start, double end) const {
  GeodesicPath p = *this;
  p.start_exponent_ = start;
  p.end_exponent_ = end;
  return p;
}

double GeodesicPath::center() const {
  if (kind_ != Kind::arc) throw DomainError("center: not an arc");
  const cplx p = points_.front().value(), q = points_.back().value();
  const double dx = p.real() - q.real();
  if (dx == 0.0) throw DomainError("center: vertical geodesic");
  return (std::norm(p) - std::norm(q)) / (2.0 * dx);
}

double GeodesicPath::radius() const { return std::abs(points_.front().value() - center()); }

std::string GeodesicPath::describe() const {
  std::string out;
  switch (kind_) {
    case Kind::vertical_ray: out = "vertical_ray("; break;
    case Kind::arc: out = "arc("; break;
    case Kind::polyline: out = "polyline("; break;
    case Kind::geodesic_chain: out = "chain("; break;
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += " -> ";
    out += point_string(points_[i]);
    if (points_[i].is_infinite()) out += half_plane_ > 0 ? "*i" : "*(-i)";
  }
  return out + ")";
}

GeodesicPath geodesic_image(const GeodesicPath& path, const GroupElement& g) {
  if (path.kind() == GeodesicPath::Kind::polyline ||
      path.kind() == GeodesicPath::Kind::geodesic_chain) {
    throw UnsupportedParameter("geodesic_image: path is not a single geodesic");
  }
  return GeodesicPath::geodesic(moebius(g, path.from()), moebius(g, path.to()), path.half_plane())
      .with_exponents(path.start_exponent(), path.end_exponent());
}

QuadratureResult integrate_form(const FormField& omega, const GeodesicPath& path,
                                const QuadratureOptions& opt) {
  return integrate_pullback([&](const PathPoint& p, cplx dz) { return omega(p.z).pullback(dz); },
                            path, opt);
}

QuadratureResult integrate_form(const FormField& omega, const GeodesicPath& path, double tol) {
  QuadratureOptions opt;
  opt.rel_tol = tol;
  return integrate_form(omega, path, opt);
}

QuadratureResult integrate_form(const AnchoredFormField& omega, const GeodesicPath& path,
                                const QuadratureOptions& opt) {
  return integrate_pullback([&](const PathPoint& p, cplx dz) { return omega(p).pullback(dz); },
                            path, opt);
}

QuadratureResult integrate_dz(const std::function<cplx(cplx)>& g, const GeodesicPath& path,
                              const QuadratureOptions& opt) {
  return integrate_pullback([&](const PathPoint& p, cplx dz) { return g(p.z) * dz; }, path, opt);
}

}  // namespace maass
