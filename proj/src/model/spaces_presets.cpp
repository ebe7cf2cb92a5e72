#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/parallel.hpp"
#include "model/spaces.hpp"

namespace covspec::model {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct LevelPoint {
  double x, t;
};

// Points of the sphere of radius r about (0, 0) in R x_f S^1, sampled on
// fiber offsets t in [0, c/2] on both sides of the basepoint circle.
std::vector<LevelPoint> level_points(const WarpedPlane& plane, double c, double r, int m) {
  std::vector<LevelPoint> out;
  for (double side : {-1.0, 1.0}) {
    for (int j = 0; j <= m; ++j) {
      double t = 0.5 * c * j / m;
      auto D = [&](double u) { return warped_distance(plane, 0.0, side * u, t).length; };
      if (D(0.0) > r) continue;
      double hi = r;
      for (int k = 0; k < 6 && D(hi) < r; ++k) hi *= 2.0;
      std::uintmax_t iters = 60;
      auto [a, b] = boost::math::tools::toms748_solve([&](double u) { return D(u) - r; }, 0.0, hi,
                                                      boost::math::tools::eps_tolerance<double>(40), iters);
      out.push_back({side * 0.5 * (a + b), t});
    }
  }
  return out;
}

LevelSetOracle cylinder_level_sets(const WarpedPlane& plane, double c, int m = 6) {
  auto measure = [plane, c, m](double r, bool per_component) {
    auto pts = level_points(plane, c, r, m);
    auto fiber = [c](double e) {
      e = std::fmod(std::abs(e), c);
      return std::min(e, c - e);
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        bool same = (pts[i].x >= 0) == (pts[j].x >= 0);
        if (!per_component || same) pairs.emplace_back(i, j);
      }
    }
    auto d = parallel_map<double>(pairs.size(), [&](std::size_t k) {
      const auto& p = pts[pairs[k].first];
      const auto& q = pts[pairs[k].second];
      double a = warped_distance(plane, p.x, q.x, fiber(p.t - q.t)).length;
      double b = warped_distance(plane, p.x, q.x, fiber(p.t + q.t)).length;
      return std::max(a, b);
    });
    return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
  };
  LevelSetOracle out;
  out.diameter = [measure](double r) { return measure(r, false); };
  out.component_diameter = [measure](double r) { return measure(r, true); };
  return out;
}

Length two_pi() { return Length(ExactLength(0, 2)); }

}  // namespace

std::vector<std::string> model_preset_names() {
  return {"cusp-cylinder", "gauss-bump-cylinder", "hyperboloid", "flat-cylinder", "cone"};
}

ModelPreset model_preset(const std::string& name) {
  ModelPreset p;
  p.name = name;
  p.circumference = two_pi();
  if (name == "cusp-cylinder") {
    p.plane = WarpedPlane::warped(WarpFunction::parse("exp(r)"), -kInf, kInf);
  } else if (name == "gauss-bump-cylinder") {
    p.plane = WarpedPlane::warped(WarpFunction::parse("1 + exp(-r^2)"), -kInf, kInf);
  } else if (name == "hyperboloid") {
    p.plane = WarpedPlane::revolution(WarpFunction::parse("sqrt(r^2 + 1)"));
  } else if (name == "flat-cylinder") {
    p.plane = WarpedPlane::warped(WarpFunction::parse("1"), -kInf, kInf);
  } else if (name == "cone") {
    // C_1 over a circle of circumference sqrt(2)*pi, i.e. intrinsic diameter pi/sqrt(2).
    p.plane = WarpedPlane::warped(WarpFunction::parse("r"), 0.0, kInf);
    p.circumference = Length(std::sqrt(2.0) * kPi);
    double diam = p.circumference.value / 2;
    p.level_sets.diameter = [diam](double r) { return cone_distance(r, r, 1.0, diam); };
    p.level_sets.component_diameter = p.level_sets.diameter;
    return p;
  } else {
    throw std::invalid_argument("unknown model preset '" + name + "'");
  }
  p.level_sets = cylinder_level_sets(p.plane, p.circumference.value);
  return p;
}

}  // namespace covspec::model
