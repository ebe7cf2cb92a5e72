#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/exact_length.hpp"

namespace covspec::rescaled {

/// A point of a two-parameter model: (base coordinate, fiber coordinate).
struct Point {
  double u = 0.0;
  double v = 0.0;
};

/// A closed-form value together with the reason it holds.
struct FastPath {
  double value = 0.0;
  std::optional<ExactLength> exact;
  bool attained = false;
  std::string reason;
};

using Ray = std::function<Point(double)>;

/// A noncompact space with fundamental group Z = <g>, seen through
/// displacement and distance oracles. Elements are the powers g^n.
/// All metric quantities carry a common scale factor, so scaled(R) is the
/// same space with every distance multiplied by R.
class SpaceModel {
 public:
  virtual ~SpaceModel() = default;

  virtual std::string name() const = 0;
  virtual bool complete() const { return true; }
  virtual bool contains(const Point&) const { return true; }

  /// d(g^n p~, p~) for a lift p~ of p.
  double displacement(long n, const Point& p) const { return scale_ * raw_displacement(n, p); }
  double distance(const Point& p, const Point& q) const { return scale_ * raw_distance(p, q); }

  Point basepoint() const { return basepoint_; }
  double scale() const { return scale_; }

  std::unique_ptr<SpaceModel> with_basepoint(const Point& p) const;
  std::unique_ptr<SpaceModel> scaled(double R) const;

  /// Points covering a bounded region around the basepoint.
  virtual std::vector<Point> sample_points() const = 0;
  /// Escape rays: distance from ray(t) to the basepoint grows linearly in t.
  virtual std::vector<Ray> escape_rays() const = 0;

  virtual std::optional<FastPath> basepoint_fast_path(long) const { return std::nullopt; }
  virtual std::optional<FastPath> infinity_fast_path(long) const { return std::nullopt; }

  virtual std::unique_ptr<SpaceModel> clone() const = 0;

 protected:
  virtual double raw_displacement(long n, const Point& p) const = 0;
  virtual double raw_distance(const Point& p, const Point& q) const = 0;

  Point basepoint_;
  double scale_ = 1.0;
};

/// R x S^1 with circumference c.
std::unique_ptr<SpaceModel> flat_cylinder(double c = 2 * 3.14159265358979323846);
/// One-sheeted hyperboloid x^2 + y^2 = z^2 + 1; basepoint on the neck.
std::unique_ptr<SpaceModel> hyperboloid();
/// C_k(Y) over a circle Y of circumference `fiber`; basepoint at radius 1.
std::unique_ptr<SpaceModel> cone(double k = 1.0, double fiber = 1.4142135623730951 * 3.14159265358979323846);
/// R^2 / <(x, y) -> (x + c, -y)>.
std::unique_ptr<SpaceModel> moebius(double c = 1.0);
/// R x_f S^1 with f even, bounded and decreasing in |r|.
std::unique_ptr<SpaceModel> nabonnand(const std::string& warp = "1/sqrt(1 + r^2)");

std::unique_ptr<SpaceModel> rescaled_preset(const std::string& name);
std::vector<std::string> rescaled_preset_names();

}  // namespace covspec::rescaled
