#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "core/exact_length.hpp"
#include "core/spectrum.hpp"
#include "model/expr.hpp"

namespace covspec::curvature {

/// Value and first two derivatives of a function of r.
struct Jet {
  std::function<double(double)> value, d1, d2;
  static Jet of(const model::WarpFunction& w);
};

/// dr^2 + h(r)^2 g_{S^2} + f(r)^2 dtheta^2 (x M): an R^3 factor warped by h,
/// a circle warped by f.
struct WarpedMetricSpec {
  Jet f, h;

  static WarpedMetricSpec from(const model::WarpFunction& f, const model::WarpFunction& h);
  /// h(0) = 0, h'(0) = 1, f(0) != 0, f'(0) = 0, checked to `tol`. Empty when all hold.
  std::vector<std::string> side_condition_issues(double tol = 1e-9) const;
};

/// Ric(V, V) for the unit circle direction V: -(f''/f + 2 f'h'/(f h)).
/// Throws std::invalid_argument when r <= 0, h(r) = 0 or f(r) = 0.
double ricci_circle_direction(const WarpedMetricSpec& spec, double r);

struct WarpRescaleReport {
  bool hypothesis_met = false;  // Ric(V, V) > 0 at every grid point
  bool passed = true;           // f' < 0 wherever required
  std::vector<double> counterexamples;
  std::string status;  // "pass", "hypothesis not met", "violation"
};

/// Positive Ric(V, V) on the grid forces f' < 0 there; any grid point with
/// Ric(V, V) > 0 and f' >= 0 is reported.
WarpRescaleReport warp_rescale_check(const WarpedMetricSpec& spec, const std::vector<double>& grid);

/// 2 (2 + delta)^n / delta^n.
double milnor_bound(int n, double delta);
Rational milnor_bound_exact(int n, const Rational& delta);

/// (C + rho (2 + delta - eps))^n / (rho (delta - eps))^n; infinite when eps >= delta.
double packing_bound(int n, double delta, double eps, double C, double rho);
/// N <= packing_bound(...).
bool packing_inequality_check(int n, double delta, double eps, double C, double rho, long N);

/// Centers of disjoint balls of radius `a` inside the ball of radius `b`
/// about the origin of R^n: hexagonal lattice for n = 2, cubic otherwise.
std::vector<std::vector<double>> lattice_ball_packing(int n, double a, double b);

struct TransferReport {
  Spectrum spectrum;
  double warp_infimum = 1.0;
  bool infimum_attained = false;
  std::string note;
};

/// CovSpec of R^3 x S^1 x_f M for f decreasing to 1: the fiber spectrum,
/// since warped shift lengths are (inf f) L_M(g) = L_M(g). Throws
/// std::invalid_argument unless f is nonincreasing with limit 1.
TransferReport berard_bergery_covspec(const model::WarpFunction& f, const Spectrum& fiber_spectrum);

struct WilkingCurvature {
  double radial = 0.0;  // 4 / (1 + r^2)^2
  double fiber = 0.0;   // 4 / (1 + r^2)
};

WilkingCurvature wilking_curvature(double r);
std::pair<Rational, Rational> wilking_curvature_exact(const Rational& r);

/// A point (z1, z2, z3, z4) of S^3 x C^2, i.e. |z1|^2 + |z2|^2 = 1.
struct QuotientPoint {
  std::array<std::complex<double>, 4> z;
  void validate(double tol = 1e-12) const;
};

struct WilkingDisplacement {
  double displacement = 0.0;  // min over theta' of the S^3 x R^4 distance
  double lower_bound = 0.0;   // (sqrt 2 / 2) sqrt(|z3|^2 + |z4|^2)
  double margin = 0.0;        // displacement - lower_bound
  double theta = 0.0;         // minimizing theta'
};

WilkingDisplacement wilking_displacement_bound(const QuotientPoint& p, int theta_grid = 720);

}  // namespace covspec::curvature
