#include "rescaled/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "model/spaces.hpp"
#include "model/warped_geodesic.hpp"

namespace covspec::rescaled {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Distance in a circle of circumference c between fiber coordinates a and b.
double circle_gap(double a, double b, double c) {
  double e = std::fmod(std::abs(a - b), c);
  return std::min(e, c - e);
}

FastPath exact_value(long value, bool attained, std::string reason) {
  return {static_cast<double>(value), ExactLength(value), attained, std::move(reason)};
}

std::vector<Point> grid(double u_lo, double u_hi, int nu, double v_lo, double v_hi, int nv) {
  std::vector<Point> out;
  for (int i = 0; i < nu; ++i) {
    double u = u_lo + (u_hi - u_lo) * i / (nu - 1);
    for (int j = 0; j < nv; ++j) out.push_back({u, v_lo + (v_hi - v_lo) * j / std::max(1, nv - 1)});
  }
  return out;
}

template <typename Derived>
class ModelBase : public SpaceModel {
 public:
  std::unique_ptr<SpaceModel> clone() const override {
    return std::make_unique<Derived>(static_cast<const Derived&>(*this));
  }
};

class FlatCylinder final : public ModelBase<FlatCylinder> {
 public:
  explicit FlatCylinder(double c) : c_(c) {
    if (!(c > 0)) throw std::invalid_argument("circumference must be positive");
  }
  std::string name() const override { return "flat-cylinder"; }

  std::vector<Point> sample_points() const override { return grid(-8, 8, 33, 0, c_ / 2, 5); }
  std::vector<Ray> escape_rays() const override {
    double c = c_;
    return {[](double t) { return Point{t, 0}; }, [](double t) { return Point{-t, 0}; },
            [c](double t) { return Point{t, c / 2}; }};
  }
  std::optional<FastPath> basepoint_fast_path(long n) const override { return zero(n); }
  std::optional<FastPath> infinity_fast_path(long n) const override { return zero(n); }

 protected:
  double raw_displacement(long n, const Point&) const override { return std::abs(n) * c_; }
  double raw_distance(const Point& p, const Point& q) const override {
    return std::hypot(p.u - q.u, circle_gap(p.v, q.v, c_));
  }

 private:
  static FastPath zero(long n) {
    return exact_value(0, n == 0, "displacement is the constant |n|c");
  }
  double c_;
};

// Surfaces R x S^1 given by a warped plane; the fiber coordinate is an angle
// in [0, 2 pi) and displacement of g^n is the distance across n full turns.
class PlaneModel : public SpaceModel {
 public:
  explicit PlaneModel(model::WarpedPlane plane) : plane_(std::move(plane)) {}

 protected:
  double raw_displacement(long n, const Point& p) const override {
    if (n == 0) return 0.0;
    return model::warped_distance(plane_, p.u, p.u, 2 * kPi * std::abs(n)).length;
  }
  double raw_distance(const Point& p, const Point& q) const override {
    return model::warped_distance(plane_, p.u, q.u, circle_gap(p.v, q.v, 2 * kPi)).length;
  }
  std::vector<Ray> axial_rays() const {
    return {[](double t) { return Point{t, 0}; }, [](double t) { return Point{-t, 0}; },
            [](double t) { return Point{t, kPi}; }, [](double t) { return Point{-t, kPi}; }};
  }

  model::WarpedPlane plane_;
};

class Hyperboloid final : public PlaneModel {
 public:
  Hyperboloid() : PlaneModel(model::WarpedPlane::revolution(model::WarpFunction::parse("sqrt(r^2 + 1)"))) {}
  std::string name() const override { return "hyperboloid"; }
  std::unique_ptr<SpaceModel> clone() const override { return std::make_unique<Hyperboloid>(*this); }

  std::vector<Point> sample_points() const override { return grid(-6, 6, 13, 0, kPi, 3); }
  std::vector<Ray> escape_rays() const override { return axial_rays(); }

  // Far out the surface is asymptotic to a cone with k = 1/sqrt(2) over a
  // circle of length 2 pi, and k * 2 pi |n| > pi for every n != 0.
  std::optional<FastPath> infinity_fast_path(long n) const override {
    if (n == 0) return exact_value(0, true, "identity");
    return exact_value(2, false, "asymptotic cone angle k*|n|*2pi exceeds pi");
  }
};

class Nabonnand final : public PlaneModel {
 public:
  explicit Nabonnand(const std::string& warp)
      : PlaneModel(model::WarpedPlane::warped(model::WarpFunction::parse(warp), 0.0, kInf, true)),
        text_(warp) {
    double sup = plane_.warp(0.0);
    for (double r = 0.5; r <= 1e6; r *= 2) {
      double fr = plane_.warp(r);
      if (!(fr > 0) || fr > sup * (1 + 1e-12)) throw std::invalid_argument("warp must be positive and nonincreasing");
    }
  }
  std::string name() const override { return "nabonnand"; }
  std::unique_ptr<SpaceModel> clone() const override { return std::make_unique<Nabonnand>(*this); }

  std::vector<Point> sample_points() const override { return grid(-8, 8, 33, 0, kPi, 3); }
  std::vector<Ray> escape_rays() const override { return axial_rays(); }

  // Displacement of g^n is at most 2 pi |n| f(0) everywhere.
  std::optional<FastPath> basepoint_fast_path(long n) const override { return zero(n); }
  std::optional<FastPath> infinity_fast_path(long n) const override { return zero(n); }

 private:
  static FastPath zero(long n) { return exact_value(0, n == 0, "displacement bounded by 2pi|n| sup f"); }
  std::string text_;
};

class Cone final : public ModelBase<Cone> {
 public:
  Cone(double k, double fiber) : k_(k), fiber_(fiber) {
    if (!(k > 0) || !(fiber > 0)) throw std::invalid_argument("cone parameters must be positive");
    basepoint_ = {1.0, 0.0};
  }
  std::string name() const override { return "cone"; }
  bool complete() const override { return false; }
  bool contains(const Point& p) const override { return p.u > 0; }

  std::vector<Point> sample_points() const override {
    std::vector<Point> out;
    for (double r : {0.01, 0.1, 0.25, 0.5, 0.75, 1.5, 2.0, 4.0, 8.0}) {
      for (int j = 0; j <= 4; ++j) out.push_back({r, fiber_ / 2 * j / 4});
    }
    return out;
  }
  std::vector<Ray> escape_rays() const override {
    double half = fiber_ / 2;
    return {[](double t) { return Point{1 + t, 0}; }, [half](double t) { return Point{1 + t, half}; }};
  }

  // Along a fiber ray toward the tip the displacement vanishes while the
  // distance to the basepoint stays near its radius.
  std::optional<FastPath> basepoint_fast_path(long n) const override {
    return exact_value(0, n == 0, "ratio tends to 0 toward the tip");
  }
  std::optional<FastPath> infinity_fast_path(long n) const override {
    if (n == 0) return exact_value(0, true, "identity");
    double angle = k_ * std::abs(n) * fiber_;
    if (angle >= kPi * (1 + 1e-12)) return exact_value(2, false, "k*|n|*length(Y) >= pi");
    return FastPath{std::sqrt(2.0 - 2.0 * std::cos(angle)), std::nullopt, false,
                    "sqrt(2 - 2cos(k*|n|*length(Y)))"};
  }

 protected:
  double raw_displacement(long n, const Point& p) const override {
    if (n == 0) return 0.0;
    return model::cone_distance(p.u, p.u, k_, std::abs(n) * fiber_);
  }
  double raw_distance(const Point& p, const Point& q) const override {
    return model::cone_distance(p.u, q.u, k_, circle_gap(p.v, q.v, fiber_));
  }

 private:
  double k_, fiber_;
};

class Moebius final : public ModelBase<Moebius> {
 public:
  explicit Moebius(double c) : c_(c) {
    if (!(c > 0)) throw std::invalid_argument("translation length must be positive");
  }
  std::string name() const override { return "moebius"; }

  std::vector<Point> sample_points() const override { return grid(0, c_, 9, -6, 6, 25); }
  std::vector<Ray> escape_rays() const override {
    double c = c_;
    return {[c](double t) { return Point{c / 2, t}; }, [](double t) { return Point{0, t}; },
            [c](double t) { return Point{c / 2, -t}; }};
  }

  // Odd powers: sqrt(n^2 c^2 + 4 y^2) >= 2 d(p, x0), with equality on x = c/2.
  // Even powers translate by the constant |n|c.
  std::optional<FastPath> basepoint_fast_path(long n) const override { return fast(n); }
  std::optional<FastPath> infinity_fast_path(long n) const override {
    auto out = fast(n);
    out.attained = false;
    return out;
  }

 protected:
  double raw_displacement(long n, const Point& p) const override {
    double dy = n % 2 == 0 ? 0.0 : 2.0 * p.v;
    return std::hypot(n * c_, dy);
  }
  double raw_distance(const Point& p, const Point& q) const override {
    long k0 = std::lround((p.u - q.u) / c_);
    double best = kInf;
    for (long k = k0 - 2; k <= k0 + 2; ++k) {
      double y = k % 2 == 0 ? q.v : -q.v;
      best = std::min(best, std::hypot(q.u + k * c_ - p.u, y - p.v));
    }
    return best;
  }

 private:
  static FastPath fast(long n) {
    if (n % 2 == 0) return exact_value(0, n == 0, "even powers translate by |n|c");
    return exact_value(2, true, "odd powers: sqrt(n^2c^2 + 4y^2) / d >= 2, equality on x = c/2");
  }
  double c_;
};

}  // namespace

std::unique_ptr<SpaceModel> SpaceModel::with_basepoint(const Point& p) const {
  if (!contains(p)) throw std::invalid_argument("basepoint outside the model");
  auto out = clone();
  out->basepoint_ = p;
  return out;
}

std::unique_ptr<SpaceModel> SpaceModel::scaled(double R) const {
  if (!(R > 0)) throw std::invalid_argument("scale must be positive");
  auto out = clone();
  out->scale_ = scale_ * R;
  return out;
}

std::unique_ptr<SpaceModel> flat_cylinder(double c) { return std::make_unique<FlatCylinder>(c); }
std::unique_ptr<SpaceModel> hyperboloid() { return std::make_unique<Hyperboloid>(); }
std::unique_ptr<SpaceModel> cone(double k, double fiber) { return std::make_unique<Cone>(k, fiber); }
std::unique_ptr<SpaceModel> moebius(double c) { return std::make_unique<Moebius>(c); }
std::unique_ptr<SpaceModel> nabonnand(const std::string& warp) { return std::make_unique<Nabonnand>(warp); }

std::vector<std::string> rescaled_preset_names() {
  return {"flat-cylinder", "hyperboloid", "cone", "moebius", "nabonnand"};
}

std::unique_ptr<SpaceModel> rescaled_preset(const std::string& name) {
  if (name == "flat-cylinder") return flat_cylinder();
  if (name == "hyperboloid") return hyperboloid();
  if (name == "cone") return cone();
  if (name == "moebius") return moebius();
  if (name == "nabonnand") return nabonnand();
  throw std::invalid_argument("unknown rescaled preset '" + name + "'");
}

}  // namespace covspec::rescaled
