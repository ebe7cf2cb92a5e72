#include "model/warped_geodesic.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <vector>

namespace covspec::model {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename Fn>
double integrate01(Fn&& fn) {
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(fn, 0.0, 1.0, 8, 1e-11, &err);
}

// f(x) - f(xt), with a Taylor expansion where the difference would cancel.
double warp_excess(const WarpedPlane& p, double x, double xt, double ft) {
  double d = x - xt;
  if (std::abs(d) < 1e-5 * (1.0 + std::abs(xt))) return p.warp_d1(xt) * d + 0.5 * p.warp_d2(xt) * d * d;
  return p.warp(x) - ft;
}

struct Legs {
  double dy = 0.0;
  double length = 0.0;
};

// Fixed 30-point Gauss-Legendre on [0, 1] for both integrands at once; the
// callers split the range into pieces on which the integrand is smooth.
template <typename Fn>
Legs gauss01(Fn&& fn) {
  using Rule = boost::math::quadrature::gauss<double, 30>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  Legs out;
  auto add = [&](double t, double weight) {
    Legs v = fn(t);
    out.dy += weight * v.dy;
    out.length += weight * v.length;
  };
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      add(0.5, 0.5 * w[i]);
    } else {
      add(0.5 + 0.5 * x[i], 0.5 * w[i]);
      add(0.5 - 0.5 * x[i], 0.5 * w[i]);
    }
  }
  return out;
}

// One leg of a Clairaut geodesic from its turning point xt (where f = c) to x.
// The square-root singularity is absorbed by x = xt + s w^2 on a first piece
// of width ~ f/f', then geometrically growing pieces cover the rest.
Legs turning_leg(const WarpedPlane& p, double xt, double x) {
  Legs out;
  double span = x - xt;
  if (span == 0.0) return out;
  double dir = span > 0 ? 1.0 : -1.0;
  double total = std::abs(span);
  double c = p.warp(xt);
  auto point = [&](double xx, double jac) {
    double f = p.warp(xx);
    double excess = warp_excess(p, xx, xt, c);
    if (excess <= 0.0) return Legs{};
    double root = std::sqrt(excess * (f + c));
    double sg = std::sqrt(p.metric_g(xx));
    return Legs{c * sg / (f * root) * jac, f * sg / root * jac};
  };
  auto accumulate = [&](auto&& piece) {
    Legs v = gauss01(piece);
    out.dy += v.dy;
    out.length += v.length;
  };
  // Near a critical point of f the scale of the singular piece is f'/f''.
  double slope = std::abs(p.warp_d1(xt)), bend = std::abs(p.warp_d2(xt));
  double first = total;
  if (slope > 0) first = std::min(first, c / slope);
  if (bend > 0) first = std::min(first, slope / bend);
  first = std::max(first, 1e-12 * total);
  accumulate([&](double w) { return point(xt + dir * first * w * w, 2.0 * first * w); });
  for (double s = first; s < total;) {
    double e = std::min(total, 2.0 * s);
    accumulate([&, s, e](double w) { return point(xt + dir * (s + (e - s) * w), e - s); });
    s = e;
  }
  return out;
}

// Monotone geodesic from a to b with constant c below min f on [a, b].
Legs monotone_legs(const WarpedPlane& p, double a, double b, double c) {
  Legs out;
  double mid = 0.5 * (a + b);
  for (int side = 0; side < 2; ++side) {
    double anchor = side == 0 ? a : b;
    double span = mid - anchor;
    auto integrand = [&](double w, bool want_dy) {
      double xx = anchor + span * w * w;
      double f = p.warp(xx);
      double root = std::sqrt(std::max((f - c) * (f + c), 1e-300));
      double jac = 2.0 * std::abs(span) * w;
      double sg = std::sqrt(p.metric_g(xx));
      return want_dy ? c * sg / (f * root) * jac : f * sg / root * jac;
    };
    out.dy += integrate01([&](double w) { return integrand(w, true); });
    out.length += integrate01([&](double w) { return integrand(w, false); });
  }
  return out;
}

void consider(GeodesicResult& best, double length, const char* method, double c = 0.0, double xt = 0.0) {
  if (std::isfinite(length) && length < best.length) {
    best.length = length;
    best.method = method;
    best.clairaut = c;
    best.turning_point = xt;
  }
}

}  // namespace

WarpedPlane WarpedPlane::warped(const WarpFunction& f, double lo, double hi, bool even) {
  WarpedPlane p;
  p.f = f;
  p.lo = lo;
  p.hi = hi;
  p.even_extension = even;
  return p;
}

WarpedPlane WarpedPlane::revolution(const WarpFunction& rho, double lo, double hi) {
  WarpedPlane p;
  p.f = rho;
  p.lo = lo;
  p.hi = hi;
  p.meridian = WarpFunction(add(number(1), power(rho.first_derivative(), number(2))));
  return p;
}

double meridian_distance(const WarpedPlane& plane, double x1, double x2) {
  if (!plane.meridian || x1 == x2) return std::abs(x2 - x1);
  double span = x2 - x1;
  return std::abs(span) * integrate01([&](double w) { return std::sqrt(plane.metric_g(x1 + span * w)); });
}

GeodesicResult warped_distance(const WarpedPlane& plane, double x1, double x2, double dy,
                               const GeodesicOptions& opts) {
  double lo = plane.lower(), hi = plane.upper();
  if (!(x1 >= lo && x1 <= hi && x2 >= lo && x2 <= hi)) throw SolverError("endpoint outside the domain");
  dy = std::abs(dy);
  GeodesicResult best;
  best.length = kInf;
  if (dy == 0.0) {
    consider(best, meridian_distance(plane, x1, x2), "monotone");
    return best;
  }
  double a = std::min(x1, x2), b = std::max(x1, x2);

  // Piecewise candidates: these are upper bounds and cover the degenerate
  // minimizers (apex passages, spirals onto a closed fiber).
  if (a == b) consider(best, plane.warp(a) * dy, "fiber");
  bool apex = std::isfinite(lo) && !plane.even_extension && plane.warp(lo) == 0.0;
  if (apex) consider(best, meridian_distance(plane, x1, lo) + meridian_distance(plane, lo, x2), "apex");
  auto broken = [&](double x) {
    return meridian_distance(plane, x1, x) + meridian_distance(plane, x, x2) + plane.warp(x) * dy;
  };
  if (!std::isfinite(best.length)) consider(best, broken(a), "broken");
  {
    double reach = best.length;
    int n = opts.broken_samples;
    double near = std::min(reach, 1e-6 * (1.0 + std::abs(a)));
    double q = std::pow(reach / near, 1.0 / n);
    for (int k = 1; k <= n; ++k) {
      double s = static_cast<double>(k) / n;
      for (double out : {reach * s * s, near * std::pow(q, k)}) {
        if (a - out >= lo) consider(best, broken(a - out), "broken");
        if (b + out <= hi) consider(best, broken(b + out), "broken");
      }
      if (b > a) consider(best, broken(a + (b - a) * s), "broken");
    }
  }

  // min of f over [a, b] bounds the Clairaut constant.
  double fmin = std::min(plane.warp(a), plane.warp(b));
  for (int k = 1; k < 64 && b > a; ++k) fmin = std::min(fmin, plane.warp(a + (b - a) * k / 64.0));

  if (b > a) {
    auto dy_of = [&](double c) { return monotone_legs(plane, a, b, c).dy; };
    double top = fmin * (1.0 - 1e-13);
    if (dy_of(top) >= dy) {
      double clo = 0.0, chi = top;
      while (chi - clo > opts.clairaut_tol * fmin) {
        double cm = 0.5 * (clo + chi);
        (dy_of(cm) < dy ? clo : chi) = cm;
      }
      double c = 0.5 * (clo + chi);
      Legs legs = monotone_legs(plane, a, b, c);
      consider(best, legs.length + c * (dy - legs.dy), "monotone", c);
    }
  }

  // Turning-point family on each side of [a, b].
  for (int side : {-1, 1}) {
    double xe = side < 0 ? a : b;
    double room = side < 0 ? xe - lo : hi - xe;
    double dmax = std::min(room, best.length);
    double dmin = 1e-9 * (1.0 + std::abs(xe));
    if (!(dmax > dmin)) continue;
    if (room == dmax && apex) dmax *= 1.0 - 1e-12;
    auto at = [&](double d) { return xe + side * d; };
    // A sample below the running minimum is only a turning point if f still
    // decreases outward there; otherwise a valley was skipped between samples.
    auto outward_down = [&](double d) { return side * plane.warp_d1(at(d)) <= 0.0; };
    auto legs_at = [&](double d) {
      Legs l1 = turning_leg(plane, at(d), x1);
      if (x1 == x2) return Legs{2.0 * l1.dy, 2.0 * l1.length};
      Legs l2 = turning_leg(plane, at(d), x2);
      return Legs{l1.dy + l2.dy, l1.length + l2.length};
    };
    int n = opts.samples;
    double ratio = std::pow(dmax / dmin, 1.0 / (n - 1));
    std::vector<double> ds;
    for (int k = 0; k < n; ++k) ds.push_back(k == n - 1 ? dmax : dmin * std::pow(ratio, k));
    // Each valid stretch ends at a local minimum of f or at the domain end;
    // Clairaut solutions crowd there (spirals onto a closed fiber, apex
    // passages), so refine geometrically toward that end.
    {
      std::vector<double> ends;
      double run = fmin;
      bool was_valid = false;
      for (int k = 0; k < n; ++k) {
        double fx = plane.warp(at(ds[k]));
        bool valid = fx < run && fx > 0.0 && outward_down(ds[k]);
        run = std::min(run, fx);
        if (was_valid && !valid) {
          double l = ds[k - 1], r = ds[k];
          for (int it = 0; it < 200 && r - l > 1e-15 * (1.0 + std::abs(at(l))); ++it) {
            double m1 = l + (r - l) / 3.0, m2 = r - (r - l) / 3.0;
            if (plane.warp(at(m1)) < plane.warp(at(m2))) {
              r = m2;
            } else {
              l = m1;
            }
          }
          ends.push_back(0.5 * (l + r));
        }
        was_valid = valid;
      }
      if (was_valid) ends.push_back(dmax);
      for (double end : ends) {
        double lo_gap = 1e-13 * (1.0 + std::abs(at(end)));
        double hi_gap = end;
        if (!(hi_gap > lo_gap)) continue;
        double q = std::pow(hi_gap / lo_gap, 1.0 / (n - 1));
        for (int k = 0; k < n; ++k) {
          double d = end - lo_gap * std::pow(q, k);
          if (d > 0.0) ds.push_back(d);
        }
      }
      std::sort(ds.begin(), ds.end());
      ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
      // Legs that arrive tangentially at the circle x = end, joined by an arc
      // of that circle: the minimizer once the legs alone cannot cover dy
      // (a kink or boundary minimum of f).
      for (double end : ends) {
        double c = plane.warp(at(end));
        if (!(c > 0.0)) continue;
        Legs legs = legs_at(end);
        if (std::isfinite(legs.dy) && legs.dy < dy) consider(best, legs.length + c * (dy - legs.dy), "wrapped", c, at(end));
      }
    }
    double running = fmin;
    double prev_d = 0.0, prev_h = 0.0;
    bool prev_valid = false;
    for (double d : ds) {
      double fx = plane.warp(at(d));
      bool valid = fx < running && fx > 0.0 && outward_down(d);
      running = std::min(running, fx);
      if (!valid) {
        prev_valid = false;
        continue;
      }
      double h = legs_at(d).dy - dy;
      if (prev_valid && (h >= 0.0) != (prev_h >= 0.0)) {
        double dl = prev_d, dr = d;
        bool left_high = prev_h >= 0.0;
        while (dr - dl > opts.clairaut_tol * std::max(1.0, std::abs(at(dl)))) {
          double dm = 0.5 * (dl + dr);
          if (!(dm > dl && dm < dr)) break;  // bracket is one ulp wide
          bool high = legs_at(dm).dy - dy >= 0.0;
          (high == left_high ? dl : dr) = dm;
        }
        double droot = 0.5 * (dl + dr);
        Legs legs = legs_at(droot);
        double c = plane.warp(at(droot));
        consider(best, legs.length + c * (dy - legs.dy), "turning", c, at(droot));
      }
      prev_valid = true;
      prev_d = d;
      prev_h = h;
    }
  }
  return best;
}

double warped_geodesic_F(const WarpFunction& f, double r, double d, bool half_line, const GeodesicOptions& opts) {
  WarpedPlane plane;
  if (half_line) {
    plane = WarpedPlane::warped(f, 0.0, kInf, f(0.0) > 0.0);
  } else {
    plane = WarpedPlane::warped(f, -kInf, kInf);
  }
  return warped_distance(plane, r, r, d, opts).length;
}

}  // namespace covspec::model
