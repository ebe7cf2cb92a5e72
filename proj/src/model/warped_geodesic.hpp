#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "model/expr.hpp"

namespace covspec::model {

/// The plane (lo, hi) x R with metric g(x) dx^2 + f(x)^2 dy^2. A warped
/// product has g = 1; a surface of revolution with profile rho(z) has
/// f = rho and g = 1 + rho'^2. With `even_extension` a half-line domain
/// [0, hi) is reflected to (-hi, hi) through f(-x) = f(x).
struct WarpedPlane {
  WarpFunction f;
  std::optional<WarpFunction> meridian;  // g; absent means g = 1
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool even_extension = false;

  double warp(double x) const { return f(even_extension ? std::abs(x) : x); }
  double warp_d1(double x) const {
    return even_extension && x < 0 ? -f.d1(-x) : f.d1(even_extension ? std::abs(x) : x);
  }
  double warp_d2(double x) const { return f.d2(even_extension ? std::abs(x) : x); }
  double metric_g(double x) const {
    if (!meridian) return 1.0;
    return (*meridian)(even_extension ? std::abs(x) : x);
  }
  double lower() const { return even_extension ? -hi : lo; }
  double upper() const { return hi; }

  static WarpedPlane warped(const WarpFunction& f, double lo, double hi, bool even = false);
  static WarpedPlane revolution(const WarpFunction& rho, double lo = -std::numeric_limits<double>::infinity(),
                                double hi = std::numeric_limits<double>::infinity());
};

struct GeodesicOptions {
  double rel_tol = 1e-8;        // target relative accuracy of the length
  double clairaut_tol = 1e-12;  // bisection tolerance on the turning point
  int samples = 160;            // turning-point samples per side
  int broken_samples = 64;      // grid for broken (meridian-fiber-meridian) paths
};

struct GeodesicResult {
  double length = 0.0;
  std::string method;  // "monotone", "turning", "fiber", "broken", "apex"
  double clairaut = 0.0;
  double turning_point = 0.0;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Length of a minimal path between (x1, 0) and (x2, dy).
GeodesicResult warped_distance(const WarpedPlane& plane, double x1, double x2, double dy,
                               const GeodesicOptions& opts = {});

/// Meridian distance between x1 and x2, the integral of sqrt(g).
double meridian_distance(const WarpedPlane& plane, double x1, double x2);

/// F(r, d): minimal geodesic length between (r, 0) and (r, d) in R x_f R,
/// or [0, inf) x_f R when `half_line` (apex or even extension at 0).
double warped_geodesic_F(const WarpFunction& f, double r, double d, bool half_line = true,
                         const GeodesicOptions& opts = {});

}  // namespace covspec::model
