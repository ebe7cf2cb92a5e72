#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "core/parallel.hpp"
#include "model/spaces.hpp"

namespace covspec::model {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double golden_min(const std::function<double(double)>& fn, double a, double b, double& fx) {
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = fn(c), fd = fn(d);
  for (int it = 0; it < 80 && b - a > 1e-10 * (1.0 + std::abs(a)); ++it) {
    if (fc < fd) {
      b = d, d = c, fd = fc;
      c = b - ratio * (b - a), fc = fn(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + ratio * (b - a), fd = fn(d);
    }
  }
  fx = std::min(fc, fd);
  return fc < fd ? c : d;
}

// Limit of f toward one end of R, read off far samples.
double tail_infimum(const WarpFunction& f, double side, double start) {
  double out = kInf;
  for (int j = 0; j <= 8; ++j) {
    double v = f(side * start * std::pow(2.0, j));
    if (std::isfinite(v)) out = std::min(out, std::max(v, 0.0));
  }
  return out;
}

}  // namespace

CylinderReport covspec_warped_cylinder(const WarpFunction& f, const Length& circumference,
                                       const CylinderOptions& opts) {
  double c = circumference.value;
  if (!(c > 0)) throw std::invalid_argument("circumference must be positive");
  if (opts.grid < 3 || opts.max_power < 1) throw std::invalid_argument("bad cylinder options");
  WarpedPlane plane = WarpedPlane::warped(f, -kInf, kInf);
  bool constant = !depends_on_variable(f.expr());
  std::optional<ExactLength> f_exact;
  if (constant) f_exact = try_exact(f.expr());

  std::vector<double> xs(opts.grid);
  for (int i = 0; i < opts.grid; ++i) xs[i] = -opts.x_range + 2.0 * opts.x_range * i / (opts.grid - 1);

  CylinderReport out;
  std::vector<std::optional<ExactLength>> exact_lengths;
  for (int n = 1; n <= opts.max_power; ++n) {
    double d = n * c;
    auto F = [&](double x) { return warped_distance(plane, x, x, d).length; };
    auto values = parallel_map<double>(xs.size(), [&](std::size_t i) { return F(xs[i]); });
    if (n == 1) {
      for (std::size_t i = 0; i < xs.size(); ++i) out.generator_profile.emplace_back(xs[i], values[i]);
    }
    std::size_t best = std::min_element(values.begin(), values.end()) - values.begin();
    CylinderLength cl;
    cl.power = n;
    cl.length = values[best];
    cl.argmin = xs[best];
    double edge = std::min(values.front(), values.back());
    bool interior = best > 0 && best + 1 < xs.size() && values[best] < edge * (1.0 - 1e-9);
    if (constant) {
      cl.attained = true;
    } else if (interior) {
      double fx = 0.0;
      cl.argmin = golden_min(F, xs[best - 1], xs[best + 1], fx);
      cl.length = std::min(cl.length, fx);
      cl.attained = true;
    } else {
      // The minimizing sequence escapes: inf_x F(x, d) = d * inf f.
      cl.attained = false;
      cl.escape_direction = values.front() <= values.back() ? -1.0 : 1.0;
      double tail = tail_infimum(f, cl.escape_direction, opts.x_range);
      cl.length = std::min(cl.length, d * tail);
    }
    if (cl.length < 1e-12 * d) cl.length = 0.0;
    std::optional<ExactLength> ex;
    if (f_exact && circumference.exact) {
      auto fe = *f_exact;
      if (fe.is_rational()) ex = *circumference.exact * (fe.rational_part() * n);
    }
    exact_lengths.push_back(ex);
    out.lengths.push_back(cl);
  }

  std::vector<PowerLength> powers;
  for (std::size_t i = 0; i < out.lengths.size(); ++i) {
    powers.push_back({out.lengths[i].power, out.lengths[i].length, exact_lengths[i], false});
  }
  out.generator_slipping = out.lengths.front().length == 0.0;
  out.spectrum = cyclic_filtration_spectrum(powers, 1e-6);
  return out;
}

RescaledEstimate revolution_rescaled_length(const WarpFunction& profile, int winding,
                                            const std::vector<double>& schedule, double z0, double lo) {
  if (winding == 0) throw std::invalid_argument("winding must be nonzero");
  WarpedPlane plane = WarpedPlane::revolution(profile, lo);
  double turn = 2.0 * kPi * std::abs(winding);
  auto ratios = parallel_map<double>(schedule.size(), [&](std::size_t i) {
    double z = schedule[i];
    return warped_distance(plane, z, z, turn).length / meridian_distance(plane, z0, z);
  });
  RescaledEstimate out;
  std::size_t start = schedule.size() / 2;
  double tail_lo = kInf, tail_hi = -kInf;
  bool up = true, down = true;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    out.samples.emplace_back(schedule[i], ratios[i]);
    if (i < start) continue;
    tail_lo = std::min(tail_lo, ratios[i]);
    tail_hi = std::max(tail_hi, ratios[i]);
    if (i > start) up = up && ratios[i] >= ratios[i - 1], down = down && ratios[i] <= ratios[i - 1];
  }
  out.estimate = tail_lo;
  out.tail_spread = tail_hi - tail_lo;
  out.tail_monotone = up || down;
  return out;
}

DiameterGrowth diameter_growth_estimate(const LevelSetOracle& oracle, const std::vector<double>& schedule,
                                        const Spectrum& rescaled_spectrum) {
  DiameterGrowth out;
  auto diam = parallel_map<std::pair<double, double>>(schedule.size(), [&](std::size_t i) {
    double r = schedule[i];
    double whole = oracle.diameter(r);
    double comp = oracle.component_diameter ? oracle.component_diameter(r) : whole;
    return std::make_pair(whole / r, comp / r);
  });
  std::size_t start = schedule.size() / 2;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    out.samples.emplace_back(schedule[i], diam[i].first);
    if (i >= start) {
      out.a = std::max(out.a, diam[i].first);
      out.a_component = std::max(out.a_component, diam[i].second);
    }
  }
  out.a = std::min(out.a, 2.0);
  out.a_component = std::min(out.a_component, 2.0);
  for (const auto& v : rescaled_spectrum.values()) {
    bool ok = v.value > 0 && (v.value <= out.a / 2 + 1e-6 || std::abs(v.value - 1.0) <= 1e-6);
    out.consistent = out.consistent && ok;
  }
  out.note = out.consistent ? "consistent with CovSpec_rs subset (0, a/2] u {1}"
                            : "inconsistent with CovSpec_rs subset (0, a/2] u {1}";
  return out;
}

}  // namespace covspec::model
