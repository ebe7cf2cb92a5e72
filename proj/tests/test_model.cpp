#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "model/spaces.hpp"
#include "model/warped_geodesic.hpp"
#include "model_oracles.hpp"

using namespace covspec;
using namespace covspec::model;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double closed_cone_ratio(double k, double d) { return std::sqrt(2.0 - 2.0 * std::cos(std::min(kPi, k * d))); }

}  // namespace

TEST_CASE("cone distance examples") {
  CHECK(cone_distance(1, 1, 1, kPi) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(cone_distance(1, 3, 1, 0) == doctest::Approx(2.0));
  CHECK(cone_distance(1, 2, 1, kPi / 2) == doctest::Approx(std::sqrt(5.0)));
  CHECK_THROWS_AS(cone_distance(0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("cone rescaled spectrum") {
  ConeSpace hyper{Length(ExactLength(1)), {Length(kPi / std::sqrt(2.0))}, Length(kPi / std::sqrt(2.0))};
  auto s = cone_rescaled_spectrum(hyper);
  REQUIRE(s.infinite.size() == 1);
  CHECK(s.infinite.values()[0].provenance.kind == ProvenanceKind::kExact);
  CHECK(*s.infinite.values()[0].exact == ExactLength(1));
  CHECK(s.basepoint.empty());

  ConeSpace none{Length(ExactLength(1)), {}, Length(1.0)};
  CHECK(cone_rescaled_spectrum(none).infinite.empty());

  // pi/8 with k = 1; cross-check the closed form against the geodesic solver:
  // F(r, 2 delta)/r tends to twice the spectrum value.
  ConeSpace eighth{Length(ExactLength(1)), {Length(ExactLength(0, Rational(1, 8)))}, Length(1.0)};
  auto e = cone_rescaled_spectrum(eighth);
  REQUIRE(e.infinite.size() == 1);
  double expect = 0.5 * std::sqrt(2.0 - 2.0 * std::cos(kPi / 4));
  CHECK(e.infinite.values()[0].value == doctest::Approx(expect).epsilon(1e-14));
  WarpedProductSpace cone{WarpFunction::parse("r")};
  auto est = warped_rescaled_length(cone, kPi / 4, geometric_schedule(1e2, 1e4, 5));
  CHECK(est.estimate / 2 == doctest::Approx(expect).epsilon(1e-8));

  // Values stay in (0, 1]; scaling the cone leaves f = kr unchanged.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.01, 5.0);
  for (int i = 0; i < 200; ++i) {
    double v = cone_rescaled_value(u(rng), u(rng));
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }
  auto f = WarpFunction::parse("3/2*r");
  for (double R : {2.0, 10.0}) CHECK(f.rescaled(R)(7.0) == doctest::Approx(f(7.0)).epsilon(1e-15));
}

TEST_CASE("F examples") {
  auto flat = WarpFunction::parse("1");
  CHECK(warped_geodesic_F(flat, 5.0, 3.0, false) == doctest::Approx(3.0).epsilon(1e-12));
  auto cone = WarpFunction::parse("r");
  CHECK(warped_geodesic_F(cone, 1e4, kPi / 2) / 1e4 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
  auto bump = WarpFunction::parse("1 + exp(-r^2)");
  double prev = kInf;
  for (double r = 0.0; r <= 3.0; r += 0.25) {
    double F = warped_geodesic_F(bump, r, 2 * kPi, false);
    CHECK(F > 2 * kPi);
    CHECK(F <= prev);
    prev = F;
  }
  CHECK(warped_geodesic_F(bump, 8.0, 2 * kPi, false) == doctest::Approx(2 * kPi).epsilon(1e-12));
}

TEST_CASE("F sandwich and monotone in d") {
  std::vector<std::string> fs = {"1 + exp(-r^2)", "2 + sin(r)", "r^2 + 1", "exp(r)"};
  for (const auto& text : fs) {
    auto f = WarpFunction::parse(text);
    WarpedPlane plane = WarpedPlane::warped(f, -kInf, kInf);
    for (double r : {-1.5, 0.0, 0.7, 2.0}) {
      double prev = 0.0;
      for (double d : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        auto res = warped_distance(plane, r, r, d);
        CHECK(res.length <= d * f(r) * (1 + 1e-12));
        // Lower bound: d times the minimum of f over the reachable range.
        double reach = res.length / 2, fmin = kInf;
        for (int k = 0; k <= 400; ++k) fmin = std::min(fmin, f(r - reach + 2 * reach * k / 400.0));
        CHECK(res.length >= d * fmin * (1 - 1e-9));
        CHECK(res.length >= prev * (1 - 1e-12));
        prev = res.length;
      }
    }
  }
}

TEST_CASE("shooting agrees with variational minimization") {
  struct Case {
    const char* f;
    double x1, x2, d;
    bool half, revolution;
    double bump;
  };
  const Case cases[] = {
      {"r", 3, 3, 1, true, false, -3},          {"r", 3, 3, 2.5, true, false, -3},
      {"r", 1, 2, 1.5, true, false, -1},        {"1/2*r", 2, 2, 3, true, false, -2},
      {"sqrt(r^2 + 1)", 10, 10, 6 * kPi, false, true, -10},
      {"1 + exp(-r^2)", 1, 1, 2 * kPi, false, false, 3},
      {"1 + exp(-r^2)", 0.5, 0.5, 2, false, false, 3}, {"1 + exp(-r^2)", 0, 1, 0.5, false, false, 1},
      {"1 + exp(-r^2)", -1, 2, 3, false, false, 2},    {"1 + exp(-r^2)", 0.5, 1.5, 6, false, false, 3},
      {"r^2 + 1", 1, 1, 2, false, false, -1},   {"r^2 + 1", 0.5, 1.5, 1, false, false, -1},
      {"2 + sin(r)", 0, 0, 3, false, false, 2}, {"2 + sin(r)", 1, 2, 2, false, false, 2},
      {"exp(r)", 0, 0, 2, false, false, -2},    {"exp(r)", 1, 0.5, 1, false, false, -2},
      {"sqrt(r^2 + 1)", 1, 1, 2 * kPi, false, true, -1}, {"sqrt(r^2 + 1)", 2, 2, 1, false, true, -2},
      {"sqrt(r^2 + 1)", 1, 3, 2, false, true, -2},       {"r + 10", 5, 5, 2, true, false, -5},
  };
  for (const auto& c : cases) {
    auto f = WarpFunction::parse(c.f);
    WarpedPlane plane = c.revolution ? WarpedPlane::revolution(f)
                        : c.half     ? WarpedPlane::warped(f, 0.0, kInf, f(0.0) > 0.0)
                                     : WarpedPlane::warped(f, -kInf, kInf);
    double shoot = warped_distance(plane, c.x1, c.x2, c.d).length;
    oracle::Plane p;
    p.f = [&](double x) { return f(c.half ? std::abs(x) : x); };
    if (c.revolution) {
      // 1 + rho'^2 by a central difference, independent of the symbolic derivative.
      p.g = [&](double x) {
        double h = 1e-5, s = (f(x + h) - f(x - h)) / (2 * h);
        return 1.0 + s * s;
      };
    }
    double oracle_len = oracle::variational_distance(p, c.x1, c.x2, c.d, c.bump);
    INFO(c.f << " " << c.x1 << " " << c.x2 << " " << c.d);
    CHECK(std::abs(shoot - oracle_len) <= 1e-6 * oracle_len);
  }
}

TEST_CASE("asymptotic F/r limits") {
  for (double k : {0.5, 1.0, 2.0}) {
    auto f = WarpFunction::parse(std::to_string(k) + "*r");
    for (double d : {kPi / 4, kPi / 2, kPi}) {
      double ratio = warped_geodesic_F(f, 1e4, d) / 1e4;
      CHECK(ratio == doctest::Approx(closed_cone_ratio(k, d)).epsilon(1e-2));
    }
  }
  CHECK(warped_geodesic_F(WarpFunction::parse("sqrt(r)"), 1e6, kPi) / 1e6 < 1e-2);
}

TEST_CASE("warped rescaled length") {
  auto sched = geometric_schedule(1e2, 1e4, 5);
  CHECK(warped_rescaled_length({WarpFunction::parse("r")}, kPi, sched).estimate ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(warped_rescaled_length({WarpFunction::parse("2 - exp(-r)")}, kPi, sched).estimate < 1e-3);
  auto shifted = warped_rescaled_length({WarpFunction::parse("r + 10")}, kPi, sched);
  CHECK(shifted.samples.back().second == doctest::Approx(2.0).epsilon(1e-2));

  WarpedProductSpace bad{WarpFunction::parse("r")};
  bad.h = WarpFunction::parse("1 + r");
  bad.second_fiber_simply_connected = false;
  CHECK_THROWS_AS(warped_rescaled_length(bad, kPi, sched), std::invalid_argument);
  bad.h = WarpFunction::parse("r");
  CHECK_NOTHROW(bad.check_hypotheses());
}

TEST_CASE("asymptotic covering spectrum") {
  auto a = asym_covspec({WarpFunction::parse("2*r + 1")}, {Length(ExactLength(0, Rational(1, 8)))});
  CHECK(a.verdict == "limit");
  REQUIRE(a.spectrum.size() == 1);
  CHECK(a.spectrum.values()[0].value == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-14));

  auto b = asym_covspec({WarpFunction::parse("sqrt(r)")}, {Length(ExactLength(0, 1))});
  CHECK(b.spectrum.empty());
  CHECK(b.fiber_slipping);

  auto c = asym_covspec({WarpFunction::parse("r")}, {Length(ExactLength(0, 1))});
  REQUIRE(c.spectrum.size() == 1);
  CHECK(*c.spectrum.values()[0].exact == ExactLength(1));

  auto d = asym_covspec({WarpFunction::parse("r*(2 + sin(r))")}, {Length(ExactLength(0, 1))});
  CHECK(d.verdict == "no-limit");
  CHECK(d.spectrum.empty());
}

TEST_CASE("warped cylinders") {
  auto bump = covspec_warped_cylinder(WarpFunction::parse("1 + exp(-r^2)"), Length(ExactLength(0, 2)));
  REQUIRE(bump.spectrum.size() == 1);
  CHECK(bump.spectrum.values()[0].value == doctest::Approx(kPi).epsilon(1e-3));
  CHECK(bump.lengths[0].length == doctest::Approx(2 * kPi).epsilon(1e-4));
  CHECK_FALSE(bump.lengths[0].attained);

  auto cusp = covspec_warped_cylinder(WarpFunction::parse("exp(r)"), Length(ExactLength(0, 2)));
  CHECK(cusp.spectrum.empty());
  CHECK(cusp.generator_slipping);
  for (const auto& l : cusp.lengths) CHECK(l.length == 0.0);

  auto flat = covspec_warped_cylinder(WarpFunction::parse("1"), Length(ExactLength(0, 2)));
  REQUIRE(flat.spectrum.size() == 1);
  CHECK(*flat.spectrum.values()[0].exact == ExactLength::pi());
  CHECK(flat.lengths[0].attained);

  // A waist at x = 0 is attained there.
  auto waist = covspec_warped_cylinder(WarpFunction::parse("2 - exp(-r^2)"), Length(ExactLength(0, 2)));
  CHECK(waist.lengths[0].attained);
  CHECK(waist.lengths[0].length == doctest::Approx(2 * kPi).epsilon(1e-8));
}

TEST_CASE("surfaces of revolution") {
  auto sched = geometric_schedule(1e1, 1e3, 5);
  auto hyp = revolution_rescaled_length(WarpFunction::parse("sqrt(r^2 + 1)"), 1, sched);
  CHECK(hyp.samples.back().second == doctest::Approx(2.0).epsilon(5e-2));
  auto cyl = revolution_rescaled_length(WarpFunction::parse("1"), 1, sched);
  CHECK(cyl.estimate < 1e-2);
  CHECK(cyl.samples.back().second == doctest::Approx(2 * kPi / 1e3));
  // rho(z) = z: slant metric 2 dz^2 + z^2 dtheta^2, a cone with k = 1/sqrt(2).
  auto cone = revolution_rescaled_length(WarpFunction::parse("r"), 1, sched, 0.0, 0.0);
  CHECK(cone.estimate == doctest::Approx(closed_cone_ratio(1 / std::sqrt(2.0), 2 * kPi)).epsilon(1e-9));
}

TEST_CASE("diameter growth") {
  auto sched = geometric_schedule(8, 32, 3);
  auto flat = model_preset("flat-cylinder");
  auto g = diameter_growth_estimate(flat.level_sets, sched, Spectrum{});
  CHECK(g.a == doctest::Approx(2.0).epsilon(0.1));
  CHECK(g.a_component < 0.5);
  CHECK(g.consistent);

  auto cone = model_preset("cone");
  Spectrum one;
  one.add_exact(ExactLength(1));
  auto c = diameter_growth_estimate(cone.level_sets, sched, one);
  CHECK(c.a == doctest::Approx(closed_cone_ratio(1.0, kPi / std::sqrt(2.0))).epsilon(1e-12));
  CHECK(c.consistent);

  auto cusp = model_preset("cusp-cylinder");
  CHECK(diameter_growth_estimate(cusp.level_sets, sched, Spectrum{}).consistent);

  Spectrum odd;
  odd.add_numeric(0.95, 1e-9);
  CHECK_FALSE(diameter_growth_estimate(cone.level_sets, sched, odd).consistent);
}

TEST_CASE("preset derivatives against finite differences") {
  std::vector<WarpFunction> fs;
  for (const auto& name : model_preset_names()) fs.push_back(model_preset(name).plane.f);
  for (const char* extra : {"1 + exp(-r)", "r + 10", "2*r + 1", "sqrt(r)"}) fs.push_back(WarpFunction::parse(extra));
  for (const auto& f : fs) {
    for (double x : {0.3, 1.0, 2.5}) {
      double h = 1e-4;
      double fd1 = (f(x + h) - f(x - h)) / (2 * h);
      double fd2 = (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
      INFO(f.text() << " at " << x);
      CHECK(std::abs(f.d1(x) - fd1) <= 1e-5 * std::max(1.0, std::abs(fd1)));
      CHECK(std::abs(f.d2(x) - fd2) <= 1e-5 * std::max(1.0, std::abs(fd2)));
    }
  }
}
