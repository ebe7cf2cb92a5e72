#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/exact_length.hpp"
#include "core/spectrum.hpp"
#include "model/warped_geodesic.hpp"

namespace covspec::model {

// ---- cones C_k(Y) = (0, inf) x_{kr} Y ----

/// Law-of-cosines distance in C_k(Y) between (r1, y1) and (r2, y2) with
/// d_Y(y1, y2) = dY.
double cone_distance(double r1, double r2, double k, double dY);

/// (1/2) sqrt(2 - 2 cos(min{pi, 2 k delta})).
double cone_rescaled_value(double k, double delta);

struct ConeSpace {
  Length k;
  std::vector<Length> base_covspec;  // CovSpec(Y)
  Length base_diameter;              // diam(Y)

  void validate() const;
};

struct ConeSpectra {
  Spectrum infinite;
  Spectrum basepoint;
};

/// The image of CovSpec(Y) under the cone formula; exact (= 1) whenever the
/// clamp at pi is decided, and an empty basepoint spectrum.
ConeSpectra cone_rescaled_spectrum(const ConeSpace& cone);

// ---- warped products [0, inf) x_f N (x_h M) ----

struct WarpedProductSpace {
  WarpFunction f;
  bool half_line = true;  // base [0, inf); otherwise R
  std::optional<WarpFunction> h;
  bool second_fiber_simply_connected = true;

  /// Refuses inputs outside "M simply connected or h(0) = 0".
  void check_hypotheses() const;
  WarpedPlane plane() const;
};

std::vector<double> geometric_schedule(double first, double last, int count);

struct RescaledEstimate {
  double estimate = 0.0;                         // min over the tail (last half)
  std::vector<std::pair<double, double>> samples;  // (r, ratio)
  bool tail_monotone = false;
  double tail_spread = 0.0;  // max - min over the tail
  std::string tag = "estimate";
};

/// F(r, L_N) / r along the schedule.
RescaledEstimate warped_rescaled_length(const WarpedProductSpace& w, double fiber_length,
                                        const std::vector<double>& schedule);

struct SlopeLimit {
  bool exists = false;
  double k = 0.0;
  std::optional<Rational> exact;  // when f' is a rational constant
};

/// lim f(r)/r, from a constant symbolic derivative when possible, otherwise
/// from f(r)/r on r = 10^2 .. 10^8.
SlopeLimit warp_slope_limit(const WarpFunction& f);

struct AsymCovSpec {
  std::string verdict;  // "limit" or "no-limit"
  SlopeLimit slope;
  Spectrum spectrum;
  bool fiber_slipping = false;  // k = 0: the fiber group is rescaled slipping
};

AsymCovSpec asym_covspec(const WarpedProductSpace& w, const std::vector<Length>& fiber_covspec);

// ---- warped cylinders R x_f S^1 ----

struct CylinderLength {
  int power = 1;
  double length = 0.0;  // L(g^n)
  double argmin = 0.0;  // best sampled x
  bool attained = true;
  double escape_direction = 0.0;  // -1 or +1 when not attained
};

struct CylinderReport {
  std::vector<CylinderLength> lengths;
  Spectrum spectrum;
  bool generator_slipping = false;
  std::vector<std::pair<double, double>> generator_profile;  // (x, F(x, c))
};

struct CylinderOptions {
  double x_range = 40.0;
  int grid = 161;
  int max_power = 4;
};

CylinderReport covspec_warped_cylinder(const WarpFunction& f, const Length& circumference,
                                       const CylinderOptions& opts = {});

// ---- surfaces of revolution ----

/// Displacement of the n-th power of the rotation generator at height z,
/// divided by the distance to the basepoint (z0, 0), along the schedule.
RescaledEstimate revolution_rescaled_length(const WarpFunction& profile, int winding,
                                            const std::vector<double>& schedule, double z0 = 0.0,
                                            double lo = -std::numeric_limits<double>::infinity());

// ---- level-set diameters ----

struct LevelSetOracle {
  std::function<double(double)> diameter;            // diam of the sphere of radius r
  std::function<double(double)> component_diameter;  // largest component diameter
};

struct DiameterGrowth {
  double a = 0.0;
  double a_component = 0.0;
  std::vector<std::pair<double, double>> samples;  // (r, diam / r)
  bool consistent = true;
  std::string note;
};

/// limsup of diam(sphere(r)) / r over the schedule tail, paired with a
/// rescaled spectrum into an experimental consistency check against
/// CovSpec_rs subset (0, a/2] u {1}.
DiameterGrowth diameter_growth_estimate(const LevelSetOracle& oracle, const std::vector<double>& schedule,
                                        const Spectrum& rescaled_spectrum);

// ---- presets ----

struct ModelPreset {
  std::string name;
  WarpedPlane plane;
  Length circumference;  // fiber circle
  LevelSetOracle level_sets;
};

/// cusp-cylinder, gauss-bump-cylinder, hyperboloid, flat-cylinder, cone.
ModelPreset model_preset(const std::string& name);
std::vector<std::string> model_preset_names();

}  // namespace covspec::model
