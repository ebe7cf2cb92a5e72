#include "model/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "core/parallel.hpp"

namespace covspec::model {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Adds (1/2) sqrt(2 - 2 cos(min{pi, 2 k d})). The value is exactly 1 when
// 2kd >= pi is decided, exactly in Q + Q*pi or beyond rounding.
void add_cone_value(Spectrum& out, const std::optional<Rational>& k_exact, double k, const Length& d,
                    const std::string& note) {
  double arg = 2.0 * k * d.value;
  std::optional<bool> clamps;
  if (k_exact && d.exact) {
    clamps = (*d.exact * Rational(2 * *k_exact)) >= ExactLength::pi();
  } else if (arg >= kPi * (1.0 + 1e-12)) {
    clamps = true;
  } else if (arg <= kPi * (1.0 - 1e-12)) {
    clamps = false;
  }
  if (clamps && *clamps) {
    out.add_exact(ExactLength(1), note);
  } else {
    out.add_numeric(cone_rescaled_value(k, d.value), clamps ? 1e-15 : 1e-12, note);
  }
}

std::optional<Rational> exact_rational(const Length& l) {
  if (l.exact && l.exact->is_rational()) return l.exact->rational_part();
  return std::nullopt;
}

}  // namespace

double cone_distance(double r1, double r2, double k, double dY) {
  if (!(r1 > 0 && r2 > 0)) throw std::invalid_argument("cone radii must be positive");
  if (!(k > 0)) throw std::invalid_argument("cone scaling k must be positive");
  if (!(dY >= 0)) throw std::invalid_argument("fiber distance must be nonnegative");
  double angle = std::min(kPi, k * dY);
  return std::sqrt(std::max(0.0, r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(angle)));
}

double cone_rescaled_value(double k, double delta) {
  return 0.5 * std::sqrt(2.0 - 2.0 * std::cos(std::min(kPi, 2.0 * k * delta)));
}

void ConeSpace::validate() const {
  if (!(k.value > 0)) throw std::invalid_argument("cone scaling k must be positive");
  for (const auto& d : base_covspec) {
    if (!(d.value > 0)) throw std::invalid_argument("CovSpec(Y) values must be positive");
  }
}

ConeSpectra cone_rescaled_spectrum(const ConeSpace& cone) {
  cone.validate();
  ConeSpectra out;
  auto k_exact = exact_rational(cone.k);
  for (const auto& d : cone.base_covspec) add_cone_value(out.infinite, k_exact, cone.k.value, d, "cone formula");
  out.infinite.complete_below = kInf;
  out.basepoint.complete_below = kInf;
  out.basepoint.notes.push_back("basepoint spectrum of a cone is empty (infimum 0 near the missing apex)");
  return out;
}

void WarpedProductSpace::check_hypotheses() const {
  if (h && !second_fiber_simply_connected && std::abs((*h)(0.0)) > 0.0) {
    throw std::invalid_argument("second fiber must be simply connected or h(0) = 0");
  }
  double lo = half_line ? 0.0 : -1e3;
  double fmin = f.min_on_grid(lo, 1e3);
  if (!(fmin > 0.0) && !(half_line && fmin == 0.0 && f(0.0) == 0.0 && f.min_on_grid(1e-6, 1e3) > 0.0)) {
    throw std::invalid_argument("warp function must be positive on the domain");
  }
  if (h && !(h->min_on_grid(1e-6, 1e3) > 0.0)) throw std::invalid_argument("h must be positive on the domain");
}

WarpedPlane WarpedProductSpace::plane() const {
  if (half_line) return WarpedPlane::warped(f, 0.0, kInf, f(0.0) > 0.0);
  return WarpedPlane::warped(f, -kInf, kInf);
}

std::vector<double> geometric_schedule(double first, double last, int count) {
  if (!(first > 0 && last >= first && count >= 1)) throw std::invalid_argument("bad schedule");
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(count == 1 ? first : first * std::pow(last / first, static_cast<double>(i) / (count - 1)));
  }
  return out;
}

namespace {

RescaledEstimate summarize(std::vector<std::pair<double, double>> samples) {
  RescaledEstimate out;
  out.samples = std::move(samples);
  std::size_t start = out.samples.size() / 2;
  double lo = kInf, hi = -kInf;
  bool up = true, down = true;
  for (std::size_t i = start; i < out.samples.size(); ++i) {
    double v = out.samples[i].second;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    if (i > start) {
      double prev = out.samples[i - 1].second;
      up = up && v >= prev;
      down = down && v <= prev;
    }
  }
  out.estimate = lo;
  out.tail_spread = hi - lo;
  out.tail_monotone = up || down;
  return out;
}

}  // namespace

RescaledEstimate warped_rescaled_length(const WarpedProductSpace& w, double fiber_length,
                                        const std::vector<double>& schedule) {
  w.check_hypotheses();
  WarpedPlane plane = w.plane();
  auto ratios = parallel_map<double>(schedule.size(), [&](std::size_t i) {
    double r = schedule[i];
    return warped_distance(plane, r, r, fiber_length).length / r;
  });
  std::vector<std::pair<double, double>> samples;
  for (std::size_t i = 0; i < schedule.size(); ++i) samples.emplace_back(schedule[i], ratios[i]);
  return summarize(std::move(samples));
}

SlopeLimit warp_slope_limit(const WarpFunction& f) {
  SlopeLimit out;
  const Expr& df = f.first_derivative();
  if (!depends_on_variable(df)) {
    out.exists = true;
    out.k = evaluate(df, 0.0);
    if (auto e = try_exact(df); e && e->is_rational()) out.exact = e->rational_part();
    return out;
  }
  std::vector<double> q;
  for (int i = 2; i <= 8; ++i) {
    double r = std::pow(10.0, i);
    q.push_back(f(r) / r);
  }
  if (!std::all_of(q.begin(), q.end(), [](double v) { return std::isfinite(v); })) return out;
  std::size_t n = q.size();
  double last = std::abs(q[n - 1] - q[n - 2]), before = std::abs(q[n - 2] - q[n - 3]);
  bool settling = last <= before && last <= 1e-3 * std::max(1.0, std::abs(q[n - 1]));
  if (!settling) return out;
  out.exists = true;
  out.k = std::abs(q[n - 1]) < 1e-3 ? 0.0 : q[n - 1];
  return out;
}

AsymCovSpec asym_covspec(const WarpedProductSpace& w, const std::vector<Length>& fiber_covspec) {
  w.check_hypotheses();
  AsymCovSpec out;
  out.slope = warp_slope_limit(w.f);
  if (!out.slope.exists) {
    out.verdict = "no-limit";
    return out;
  }
  out.verdict = "limit";
  out.spectrum.complete_below = kInf;
  if (out.slope.k == 0.0) {
    out.fiber_slipping = true;
    return out;
  }
  for (const auto& d : fiber_covspec) add_cone_value(out.spectrum, out.slope.exact, out.slope.k, d, "slope formula");
  return out;
}

}  // namespace covspec::model
