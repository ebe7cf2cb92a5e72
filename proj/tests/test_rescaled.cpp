#include <doctest.h>

#include <cmath>
#include <numbers>

#include "model_oracles.hpp"
#include "rescaled/rescaled.hpp"

using namespace covspec;
using namespace covspec::rescaled;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> spectrum_values(const Spectrum& s) { return s.as_doubles(); }

// A bounded model: no escape rays.
class Disk final : public SpaceModel {
 public:
  std::string name() const override { return "disk"; }
  std::vector<Point> sample_points() const override { return {{0.5, 0}}; }
  std::vector<Ray> escape_rays() const override { return {}; }
  std::unique_ptr<SpaceModel> clone() const override { return std::make_unique<Disk>(*this); }

 protected:
  double raw_displacement(long n, const Point&) const override { return std::abs(n); }
  double raw_distance(const Point& p, const Point& q) const override { return std::hypot(p.u - q.u, p.v - q.v); }
};

}  // namespace

TEST_CASE("flat cylinder: every rescaled length vanishes") {
  auto s = flat_cylinder();
  for (long n : {1, 2, 5}) {
    auto b = rescaled_length_basepoint(*s, n);
    auto i = rescaled_length_infinity(*s, n);
    REQUIRE(b.exact);
    REQUIRE(i.exact);
    CHECK(b.exact->is_zero());
    CHECK(i.exact->is_zero());
  }
  CHECK(rescaled_covspec(*s, Variant::kInfinity).size() == 0);
  CHECK(rescaled_covspec(*s, Variant::kBasepoint).size() == 0);
  CHECK(loops_to_infinity_flag(*s, 1).loops_to_infinity);
  CHECK(rescaled_slipping_membership(*s, 1).verdict == Verdict::kYes);

  RescaledOptions opts;
  opts.cross_check = true;
  auto i = rescaled_length_infinity(*s, 1, opts);
  REQUIRE(i.numeric);
  // Displacement 2 pi against distance ~ 4R at the far end of the schedule.
  CHECK(*i.numeric == doctest::Approx(2 * kPi / 40000).epsilon(1e-9));
}

TEST_CASE("cone: basepoint lengths vanish, infinite lengths follow the angle formula") {
  auto s = cone();
  CHECK_FALSE(s->complete());
  for (long n : {1, 2, 3}) {
    auto b = rescaled_length_basepoint(*s, n);
    REQUIRE(b.exact);
    CHECK(b.exact->is_zero());
    auto i = rescaled_length_infinity(*s, n);
    REQUIRE(i.exact);
    CHECK(*i.exact == ExactLength(2));
  }
  auto inf = rescaled_covspec(*s, Variant::kInfinity);
  REQUIRE(inf.size() == 1);
  REQUIRE(inf.values()[0].exact);
  CHECK(*inf.values()[0].exact == ExactLength(1));
  CHECK(rescaled_covspec(*s, Variant::kBasepoint).size() == 0);

  // A narrow cone stays below the clamp: sqrt(2 - 2 cos(k n l)).
  auto narrow = cone(0.1, 2 * kPi);
  RescaledOptions opts;
  opts.cross_check = true;
  for (long n : {1, 2}) {
    auto i = rescaled_length_infinity(*narrow, n, opts);
    double expect = std::sqrt(2 - 2 * std::cos(0.1 * n * 2 * kPi));
    CHECK(i.value == doctest::Approx(expect).epsilon(1e-12));
    REQUIRE(i.numeric);
    CHECK(*i.numeric == doctest::Approx(expect).epsilon(1e-3));
  }
  auto spec = rescaled_covspec(*narrow, Variant::kInfinity);
  for (double v : spectrum_values(spec)) {
    CHECK(v > 0);
    CHECK(v <= 1);
  }
}

TEST_CASE("hyperboloid: generator length 2 at infinity, attained minimum below 2 at the neck") {
  auto s = hyperboloid();
  RescaledOptions opts;
  opts.cross_check = true;
  auto i = rescaled_length_infinity(*s, 1, opts);
  REQUIRE(i.exact);
  CHECK(*i.exact == ExactLength(2));
  REQUIRE(i.numeric);
  CHECK(*i.numeric == doctest::Approx(2.0).epsilon(1e-3));

  auto b = rescaled_length_basepoint(*s, 1);
  CHECK(b.attained);
  CHECK(b.value < 2.0);
  CHECK(b.value > 1.99);

  // Dense sampling with variational distances. The minimizing points lie
  // opposite the basepoint, at fiber offset pi.
  oracle::Plane p;
  p.f = [](double z) { return std::sqrt(z * z + 1); };
  p.g = [](double z) { return 1.0 + z * z / (z * z + 1); };
  double best = 1e9;
  for (double z = 2.5; z <= 5.0 + 1e-9; z += 0.25) {
    double disp = oracle::variational_distance(p, z, z, 2 * kPi, -z);
    double dist = oracle::variational_distance(p, 0.0, z, kPi, 1.0);
    best = std::min(best, disp / dist);
  }
  CHECK(best < 2.0);
  CHECK(b.value <= best + 1e-6);
  CHECK(b.value >= best - 1e-3);

  auto b2 = rescaled_length_basepoint(*s, 2);
  CHECK_FALSE(b2.attained);
  CHECK(b2.value == 2.0);

  CHECK(rescaled_delta_group(*s, 0.5, Variant::kInfinity).generator == 0);
  CHECK(rescaled_delta_group(*s, 1.5, Variant::kInfinity).whole_group());
  CHECK(rescaled_slipping_membership(*s, 1).verdict == Verdict::kNo);
  CHECK_FALSE(loops_to_infinity_flag(*s, 1).loops_to_infinity);

  opts.cross_check = false;
  opts.max_power = 3;
  auto inf = rescaled_covspec(*s, Variant::kInfinity, opts);
  REQUIRE(inf.size() == 1);
  CHECK(inf.values()[0].value == 1.0);
  auto base = rescaled_covspec(*s, Variant::kBasepoint, opts);
  REQUIRE(base.size() == 1);
  CHECK(base.values()[0].value == doctest::Approx(b.value / 2).epsilon(1e-9));
}

TEST_CASE("moebius band: odd powers length 2, even powers 0, spectrum {1}") {
  auto s = moebius();
  RescaledOptions opts;
  opts.cross_check = true;
  auto g = rescaled_length_infinity(*s, 1, opts);
  auto g2 = rescaled_length_infinity(*s, 2, opts);
  CHECK(std::abs(g.value - 2.0) <= 1e-6);
  CHECK(g2.value < 1e-4);
  REQUIRE(g.numeric);
  REQUIRE(g2.numeric);
  CHECK(std::abs(*g.numeric - 2.0) <= 1e-9);
  CHECK(*g2.numeric < 1e-4);

  // Brute force over a grid of the strip: the ratio never drops below 2.
  double c = 1.0, best = 1e9;
  for (int i = 0; i <= 40; ++i) {
    for (int j = -40; j <= 40; ++j) {
      double x = c * i / 40.0, y = 0.25 * j;
      double d = 1e9;
      for (int k = -4; k <= 4; ++k) d = std::min(d, std::hypot(x + k * c, k % 2 == 0 ? y : -y));
      if (d < 1e-9) continue;
      best = std::min(best, std::hypot(c, 2 * y) / d);
    }
  }
  CHECK(best >= 2.0 - 1e-12);
  CHECK(best <= 2.0 + 1e-12);
  CHECK(rescaled_length_basepoint(*s, 1).value == 2.0);

  auto spec = rescaled_covspec(*s, Variant::kInfinity);
  REQUIRE(spec.size() == 1);
  REQUIRE(spec.values()[0].exact);
  CHECK(*spec.values()[0].exact == ExactLength(1));

  auto half = rescaled_delta_group(*s, 0.5, Variant::kInfinity);
  CHECK(half.generator == 2);
  CHECK(half.describe() == "<g^2>");
  CHECK(rescaled_delta_group(*s, 1.5, Variant::kInfinity).whole_group());
  auto at_one = rescaled_delta_group(*s, 1.0, Variant::kInfinity);
  CHECK(at_one.boundary == std::vector<long>{1, 3, 5});

  CHECK(loops_to_infinity_flag(*s, 2).loops_to_infinity);
  CHECK_FALSE(loops_to_infinity_flag(*s, 1).loops_to_infinity);
  CHECK(rescaled_slipping_membership(*s, 2).verdict == Verdict::kYes);
  CHECK(rescaled_slipping_membership(*s, 4).verdict == Verdict::kYes);
  CHECK(rescaled_slipping_membership(*s, 1).verdict == Verdict::kNo);
}

TEST_CASE("nabonnand-shape warp: the generator slips") {
  auto s = nabonnand();
  CHECK(rescaled_slipping_membership(*s, 1).verdict == Verdict::kYes);
  CHECK(rescaled_slipping_membership(*s, 0).verdict == Verdict::kYes);
  CHECK(loops_to_infinity_flag(*s, 1).loops_to_infinity);
  CHECK(loops_to_infinity_flag(*s, 1).cut_spectrum_empty);

  RescaledOptions opts;
  opts.cross_check = true;
  auto i = rescaled_length_infinity(*s, 1, opts);
  REQUIRE(i.witness.size() >= 3);
  std::size_t k = i.witness.size();
  CHECK(i.witness[k - 1].second < 1e-4);
  CHECK(i.witness[k - 1].second <= i.witness[k - 2].second);
  CHECK(i.witness[k - 2].second <= i.witness[k - 3].second);

  CHECK_THROWS_AS(nabonnand("1 + r^2"), std::invalid_argument);
}

TEST_CASE("rescaled lemma suite on every preset") {
  RescaledOptions opts;
  opts.max_power = 3;
  for (const auto& name : rescaled_preset_names()) {
    auto s = rescaled_preset(name);
    for (long n = 1; n <= opts.max_power; ++n) {
      INFO(name << " g^" << n);
      auto b = rescaled_length_basepoint(*s, n, opts);
      auto i = rescaled_length_infinity(*s, n, opts);
      CHECK(b.value <= 2.0 + 1e-9);
      CHECK(i.value <= 2.0 + 1e-9);
      CHECK(b.value >= 0.0);
      CHECK(i.value >= b.value - 1e-6);

      Point other = s->sample_points()[1];
      auto i2 = rescaled_length_infinity(*s->with_basepoint(other), n, opts);
      CHECK(std::abs(i2.value - i.value) < 1e-6);

      // Zero iff zero needs completeness; the cone has its tip removed.
      if (s->complete()) CHECK((b.value < 1e-6) == (i.value < 1e-6));

      for (double R : {2.0, 10.0}) {
        auto big = s->scaled(R);
        auto bR = rescaled_length_basepoint(*big, n, opts);
        auto iR = rescaled_length_infinity(*big, n, opts);
        if (b.exact) {
          REQUIRE(bR.exact);
          CHECK(*bR.exact == *b.exact);
        } else {
          CHECK(std::abs(bR.value - b.value) < 1e-6);
        }
        if (i.exact) {
          REQUIRE(iR.exact);
          CHECK(*iR.exact == *i.exact);
        } else {
          CHECK(std::abs(iR.value - i.value) < 1e-6);
        }
      }
    }
    for (auto which : {Variant::kBasepoint, Variant::kInfinity}) {
      auto spec = rescaled_covspec(*s, which, opts);
      for (double v : spectrum_values(spec)) {
        CHECK(v > 0);
        CHECK(v <= 1 + 1e-12);
      }
      CHECK(rescaled_delta_group(*s, 1.01, which, opts).whole_group());
    }
  }
}

TEST_CASE("bounded models and bad input are refused") {
  Disk d;
  CHECK_THROWS_AS(rescaled_length_infinity(d, 1), std::invalid_argument);
  CHECK_THROWS_AS(rescaled_delta_group(*moebius(), 0.0, Variant::kInfinity), std::invalid_argument);
  CHECK_THROWS_AS(cone()->with_basepoint({-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(rescaled_preset("torus"), std::invalid_argument);
  CHECK(rescaled_slipping_membership(*hyperboloid(), 0).verdict == Verdict::kYes);
}
