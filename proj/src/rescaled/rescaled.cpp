#include "rescaled/rescaled.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "core/parallel.hpp"

namespace covspec::rescaled {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// d(g^n x~, x~) / d(x, x0), or inf at the basepoint itself.
double ratio(const SpaceModel& s, long n, const Point& p) {
  double d = s.distance(p, s.basepoint());
  if (!(d > 1e-9 * s.scale())) return kInf;
  return s.displacement(n, p) / d;
}

std::vector<Ray> rays_of(const SpaceModel& s) {
  auto rays = s.escape_rays();
  if (rays.empty()) throw std::invalid_argument(s.name() + " declares no escape rays");
  return rays;
}

std::string tail_tag(const std::vector<std::pair<double, double>>& w) {
  if (w.size() < 3) return "not-converged";
  std::size_t k = w.size();
  double a = w[k - 3].second, b = w[k - 2].second, c = w[k - 1].second;
  double spread = std::max({a, b, c}) - std::min({a, b, c});
  if (spread <= 1e-6 * (1.0 + std::abs(c))) return "converged";
  if ((a >= b && b >= c) || (a <= b && b <= c)) return "slow";
  return "not-converged";
}

// Infimum outside the R-ball, read along the declared rays at t in [R, 4R].
std::vector<std::pair<double, double>> tail_infima(const SpaceModel& s, long n, const RescaledOptions& opts) {
  auto rays = rays_of(s);
  const double ts[] = {1.0, 2.0, 4.0};
  std::size_t per_r = rays.size() * 3;
  auto vals = parallel_map<double>(opts.schedule.size() * per_r, [&](std::size_t i) {
    double R = opts.schedule[i / per_r];
    std::size_t j = i % per_r;
    return ratio(s, n, rays[j / 3](R * ts[j % 3]));
  });
  std::vector<std::pair<double, double>> out;
  for (std::size_t r = 0; r < opts.schedule.size(); ++r) {
    auto first = vals.begin() + r * per_r;
    out.emplace_back(opts.schedule[r], *std::min_element(first, first + per_r));
  }
  return out;
}

void apply_fast_path(RescaledLengthReport& out, const FastPath& fp) {
  out.value = fp.value;
  out.exact = fp.exact;
  out.attained = fp.attained;
  out.method = "closed form: " + fp.reason;
  out.convergence = fp.exact ? "exact" : "converged";
}

}  // namespace

RescaledLengthReport rescaled_length_infinity(const SpaceModel& s, long n, const RescaledOptions& opts) {
  if (opts.schedule.empty()) throw std::invalid_argument("empty radius schedule");
  rays_of(s);
  RescaledLengthReport out;
  if (n == 0) {
    out.value = 0.0, out.exact = ExactLength(0), out.attained = true;
    out.convergence = "exact", out.method = "identity";
    return out;
  }
  auto fp = s.infinity_fast_path(n);
  if (!fp || opts.cross_check) {
    out.witness = tail_infima(s, n, opts);
    out.numeric = out.witness.back().second;
  }
  if (fp) {
    apply_fast_path(out, *fp);
    return out;
  }
  out.value = *out.numeric;
  out.convergence = tail_tag(out.witness);
  out.method = "ray infima on a radius schedule";
  return out;
}

RescaledLengthReport rescaled_length_basepoint(const SpaceModel& s, long n, const RescaledOptions& opts) {
  RescaledLengthReport out;
  if (n == 0) {
    out.value = 0.0, out.exact = ExactLength(0), out.attained = true;
    out.convergence = "exact", out.method = "identity";
    return out;
  }
  auto fast = s.basepoint_fast_path(n);
  if (fast && !opts.cross_check) {
    apply_fast_path(out, *fast);
    return out;
  }
  auto inf_report = rescaled_length_infinity(s, n, opts);

  auto samples = s.sample_points();
  auto vals = parallel_map<double>(samples.size(), [&](std::size_t i) { return ratio(s, n, samples[i]); });
  std::size_t best = std::min_element(vals.begin(), vals.end()) - vals.begin();
  Point p = samples[best];
  double fp_val = vals[best];

  // Compass search from the best sample, unless the samples sit well above
  // the far-field value and the infimum is only approached at infinity.
  double hu = 0.5, hv = 0.25;
  bool promising = fp_val < inf_report.value * (1.0 + 1e-2);
  for (int it = 0; promising && it < opts.refine_iterations && hu > 1e-6; ++it) {
    Point cand[4] = {{p.u + hu, p.v}, {p.u - hu, p.v}, {p.u, p.v + hv}, {p.u, p.v - hv}};
    bool moved = false;
    for (const auto& q : cand) {
      if (!s.contains(q)) continue;
      double r = ratio(s, n, q);
      if (r < fp_val) fp_val = r, p = q, moved = true;
    }
    if (!moved) hu *= 0.5, hv *= 0.5;
  }

  out.witness = inf_report.witness;
  out.witness.emplace_back(p.u, fp_val);
  out.numeric = std::min(fp_val, inf_report.value);
  if (fast) {
    apply_fast_path(out, *fast);
    return out;
  }
  // Far points realize the infinite rescaled length in the limit.
  if (fp_val < inf_report.value - 1e-9) {
    out.value = fp_val;
    out.attained = true;
    out.convergence = "converged";
    out.method = "sampled minimum, refined by compass search";
  } else {
    out.value = inf_report.value;
    out.exact = inf_report.exact;
    out.attained = false;
    out.convergence = inf_report.convergence;
    out.method = "escaping witness: " + inf_report.method;
  }
  return out;
}

RescaledLengthReport rescaled_length(const SpaceModel& s, long n, Variant which, const RescaledOptions& opts) {
  return which == Variant::kBasepoint ? rescaled_length_basepoint(s, n, opts) : rescaled_length_infinity(s, n, opts);
}

std::string DeltaGroup::describe() const {
  if (generator == 0) return "trivial";
  if (generator == 1) return "whole group <g>";
  return "<g^" + std::to_string(generator) + ">";
}

DeltaGroup rescaled_delta_group(const SpaceModel& s, double delta, Variant which, const RescaledOptions& opts) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  DeltaGroup out;
  for (long n = 1; n <= opts.max_power; ++n) {
    double L = rescaled_length(s, n, which, opts).value;
    double gap = L - 2 * delta;
    if (std::abs(gap) <= opts.boundary_tol) {
      out.boundary.push_back(n);
    } else if (gap < 0) {
      out.members.push_back(n);
      out.generator = std::gcd(out.generator, n);
    }
  }
  return out;
}

Spectrum rescaled_covspec(const SpaceModel& s, Variant which, const RescaledOptions& opts) {
  std::vector<PowerLength> powers;
  for (long n = 1; n <= opts.max_power; ++n) {
    auto rep = rescaled_length(s, n, which, opts);
    powers.push_back({n, rep.value, rep.exact, rep.convergence == "not-converged"});
  }
  return cyclic_filtration_spectrum(powers, opts.boundary_tol);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    default: return "undetermined";
  }
}

SlippingVerdict rescaled_slipping_membership(const SpaceModel& s, long n, const RescaledOptions& opts) {
  if (n == 0) return {Verdict::kYes, "identity"};
  // Zero-length powers and their products.
  auto is_zero = [&](const RescaledLengthReport& r) -> std::optional<bool> {
    if (r.exact) return r.exact->is_zero();
    if (r.method.rfind("closed form", 0) == 0) return r.value == 0.0;
    const auto& w = r.witness;
    if (w.size() < 3) return std::nullopt;
    std::size_t k = w.size();
    bool small = w[k - 1].second < opts.zero_threshold;
    bool decreasing = w[k - 3].second >= w[k - 2].second && w[k - 2].second >= w[k - 1].second;
    if (small && decreasing) return true;
    if (w[k - 1].second >= opts.zero_threshold && w[k - 3].second >= opts.zero_threshold) return false;
    return std::nullopt;
  };
  long g = 0;
  bool unresolved = false;
  for (long m = 1; m <= std::max(opts.max_power, std::abs(n)); ++m) {
    auto z = is_zero(rescaled_length_infinity(s, m, opts));
    if (!z) unresolved = true;
    else if (*z) g = std::gcd(g, m);
    if (m == std::abs(n) && z && *z) return {Verdict::kYes, "L^inf_rs(g^" + std::to_string(m) + ") = 0"};
  }
  if (g != 0 && n % g == 0) return {Verdict::kYes, "product of zero-length powers of <g^" + std::to_string(g) + ">"};
  if (unresolved) return {Verdict::kUndetermined, "rescaled length near the zero threshold"};
  return {Verdict::kNo, "positive infinite rescaled length"};
}

LoopsToInfinity loops_to_infinity_flag(const SpaceModel& s, long n, const RescaledOptions& opts) {
  LoopsToInfinity out;
  auto rep = rescaled_length_infinity(s, n, opts);
  out.loops_to_infinity = rep.value < 2.0 - opts.boundary_tol;
  if (!out.loops_to_infinity) {
    out.note = "L^inf_rs = " + std::to_string(rep.value) + " is not below 2";
    return out;
  }
  auto spec = rescaled_covspec(s, Variant::kInfinity, opts);
  bool below_one = !spec.has_undetermined();
  for (const auto& v : spec.values()) below_one = below_one && v.value < 1.0 - opts.boundary_tol;
  out.cut_spectrum_empty = below_one;
  out.note = below_one ? "loops to infinity; CovSpec^inf_rs inside (0, 1) so CovSpec_cut is empty"
                       : "loops to infinity";
  return out;
}

}  // namespace covspec::rescaled
