#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "maass/complex_branch.hpp"
#include "maass/modular_group.hpp"
#include "maass/ms_kernel.hpp"

namespace maass {

/// Oriented path in H (half_plane = +1) or H^- (half_plane = -1).
///  - vertical_ray / arc: the hyperbolic geodesic between two points of the
///    closed half-plane (real points and infinity allowed as ends);
///  - polyline: straight segments between vertices; the last vertex may be
///    infinity (vertical ray) and the first may be real;
///  - geodesic_chain: consecutive vertices joined by geodesics, so the path
///    can run through real points (cusps) and meet R orthogonally.
/// `start_exponent` / `end_exponent` declare an integrable singularity
/// |z - endpoint|^alpha of the integrand at a finite end in the half-plane.
class GeodesicPath {
 public:
  enum class Kind { vertical_ray, arc, polyline, geodesic_chain };

  static GeodesicPath vertical_ray(cplx base, int direction);
  static GeodesicPath geodesic(ExtendedComplex from, ExtendedComplex to, int half_plane = 1);
  static GeodesicPath polyline(std::vector<ExtendedComplex> vertices, int half_plane = 1);
  static GeodesicPath geodesic_chain(std::vector<ExtendedComplex> vertices, int half_plane = 1);

  Kind kind() const { return kind_; }
  int half_plane() const { return half_plane_; }
  const std::vector<ExtendedComplex>& points() const { return points_; }
  ExtendedComplex from() const { return points_.front(); }
  ExtendedComplex to() const { return points_.back(); }

  GeodesicPath reversed() const;
  GeodesicPath with_exponents(double start, double end) const;
  double start_exponent() const { return start_exponent_; }
  double end_exponent() const { return end_exponent_; }

  /// For arcs with two finite, distinct real parts: center and radius of the
  /// Euclidean semicircle.
  double center() const;
  double radius() const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::vertical_ray;
  std::vector<ExtendedComplex> points_;
  int half_plane_ = 1;
  double start_exponent_ = 0.0;
  double end_exponent_ = 0.0;
};

/// Image of a geodesic under z -> gz (endpoints mapped, orientation kept).
/// Polylines and chains are not supported (UnsupportedParameter).
GeodesicPath geodesic_image(const GeodesicPath& path, const GroupElement& g);

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_evals = 2000000;
  double cusp_height = 12.0;
};

struct QuadratureResult {
  cplx value;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  double cusp_height = 0.0;  ///< largest |Im z| reached toward a cusp at infinity
  double tail_bound = 0.0;   ///< part of the error estimate from truncated ends
};

using FormField = std::function<OneFormSample(cplx)>;
/// Field that receives the offset from a singular endpoint (see PathPoint).
using AnchoredFormField = std::function<OneFormSample(const PathPoint&)>;

/// Integral of the 1-form A dz + B dzbar along the path. The error estimate
/// meets max(abs_tol, rel_tol |value|), or, when the pieces of the path
/// cancel (closed loops), rel_tol times the summed size of the pieces.
QuadratureResult integrate_form(const FormField& omega, const GeodesicPath& path,
                                const QuadratureOptions& opt = {});

QuadratureResult integrate_form(const FormField& omega, const GeodesicPath& path, double tol);
QuadratureResult integrate_form(const AnchoredFormField& omega, const GeodesicPath& path,
                                const QuadratureOptions& opt = {});

/// Integral of a plain holomorphic-style integrand g(z) dz.
QuadratureResult integrate_dz(const std::function<cplx(cplx)>& g, const GeodesicPath& path,
                              const QuadratureOptions& opt = {});

}  // namespace maass
