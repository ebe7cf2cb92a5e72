#include "curvature/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace covspec::curvature {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

Jet Jet::of(const model::WarpFunction& w) {
  return {[w](double r) { return w(r); }, [w](double r) { return w.d1(r); }, [w](double r) { return w.d2(r); }};
}

WarpedMetricSpec WarpedMetricSpec::from(const model::WarpFunction& f, const model::WarpFunction& h) {
  return {Jet::of(f), Jet::of(h)};
}

std::vector<std::string> WarpedMetricSpec::side_condition_issues(double tol) const {
  std::vector<std::string> out;
  if (std::abs(h.value(0.0)) > tol) out.push_back("h(0) != 0");
  if (std::abs(h.d1(0.0) - 1.0) > tol) out.push_back("h'(0) != 1");
  if (std::abs(f.value(0.0)) <= tol) out.push_back("f(0) = 0");
  if (std::abs(f.d1(0.0)) > tol) out.push_back("f'(0) != 0");
  return out;
}

double ricci_circle_direction(const WarpedMetricSpec& spec, double r) {
  if (!(r > 0)) throw std::invalid_argument("r must be positive");
  double f = spec.f.value(r), h = spec.h.value(r);
  if (h == 0.0) throw std::invalid_argument("h vanishes at r > 0");
  if (f == 0.0) throw std::invalid_argument("f vanishes at r");
  return -(spec.f.d2(r) / f + 2.0 * spec.f.d1(r) * spec.h.d1(r) / (f * h));
}

WarpRescaleReport warp_rescale_check(const WarpedMetricSpec& spec, const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty grid");
  WarpRescaleReport out;
  out.hypothesis_met = true;
  for (double r : grid) {
    double ric = ricci_circle_direction(spec, r);
    if (!(ric > 0)) {
      out.hypothesis_met = false;
      continue;
    }
    if (!(spec.f.d1(r) < 0)) out.counterexamples.push_back(r);
  }
  out.passed = out.counterexamples.empty();
  if (!out.passed) {
    out.status = "violation";
  } else {
    out.status = out.hypothesis_met ? "pass" : "hypothesis not met";
  }
  return out;
}

double milnor_bound(int n, double delta) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  return 2.0 * std::pow((2.0 + delta) / delta, n);
}

Rational milnor_bound_exact(int n, const Rational& delta) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  Rational q = (2 + delta) / delta, out = 2;
  for (int i = 0; i < n; ++i) out *= q;
  return out;
}

double packing_bound(int n, double delta, double eps, double C, double rho) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(rho > 0) || !(eps >= 0) || !(C >= 0)) throw std::invalid_argument("need rho > 0, eps >= 0, C >= 0");
  if (eps >= delta) return std::numeric_limits<double>::infinity();
  return std::pow((C + rho * (2.0 + delta - eps)) / (rho * (delta - eps)), n);
}

bool packing_inequality_check(int n, double delta, double eps, double C, double rho, long N) {
  return static_cast<double>(N) <= packing_bound(n, delta, eps, C, rho);
}

std::vector<std::vector<double>> lattice_ball_packing(int n, double a, double b) {
  if (n < 1 || !(a > 0) || !(b > 0)) throw std::invalid_argument("bad packing parameters");
  std::vector<std::vector<double>> out;
  double reach = b - a;
  if (reach < 0) return out;
  auto keep = [&](std::vector<double> c) {
    double s = 0.0;
    for (double x : c) s += x * x;
    if (std::sqrt(s) <= reach * (1 + 1e-12)) out.push_back(std::move(c));
  };
  long m = static_cast<long>(std::floor(reach / (2 * a))) + 1;
  if (n == 2) {
    long rows = static_cast<long>(std::floor(reach / (std::sqrt(3.0) * a))) + 1;
    for (long j = -rows; j <= rows; ++j) {
      for (long i = -m - rows; i <= m + rows; ++i) keep({2 * a * (i + 0.5 * j), std::sqrt(3.0) * a * j});
    }
    return out;
  }
  std::vector<long> idx(n, -m);
  while (true) {
    std::vector<double> c(n);
    for (int k = 0; k < n; ++k) c[k] = 2 * a * idx[k];
    keep(std::move(c));
    int k = 0;
    while (k < n && ++idx[k] > m) idx[k++] = -m;
    if (k == n) break;
  }
  return out;
}

TransferReport berard_bergery_covspec(const model::WarpFunction& f, const Spectrum& fiber_spectrum) {
  std::vector<double> rs{0.0};
  for (double r = 1e-3; r <= 1e8; r *= 2) rs.push_back(r);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    double v = f(rs[i]);
    if (!std::isfinite(v) || !(v > 0)) throw std::invalid_argument("warp must be positive");
    if (i > 0 && v > f(rs[i - 1]) * (1 + 1e-12)) throw std::invalid_argument("warp must be nonincreasing");
  }
  double far = f(1e8), mid = f(1e6);
  if (!(std::abs(far - 1.0) < 1e-6 && std::abs(far - 1.0) <= std::abs(mid - 1.0)))
    throw std::invalid_argument("warp must decrease to the limit 1, found ~" + std::to_string(far));
  TransferReport out;
  out.spectrum = fiber_spectrum;
  out.warp_infimum = 1.0;
  out.infimum_attained = !model::depends_on_variable(f.expr());
  out.note = out.infimum_attained ? "isometric product: shift lengths equal the fiber's"
                                  : "inf f = 1 is not attained; shift lengths equal the fiber's";
  return out;
}

WilkingCurvature wilking_curvature(double r) {
  if (!(r >= 0)) throw std::invalid_argument("r must be nonnegative");
  double q = 1.0 + r * r;
  return {4.0 / (q * q), 4.0 / q};
}

std::pair<Rational, Rational> wilking_curvature_exact(const Rational& r) {
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  Rational q = 1 + r * r;
  return {Rational(4) / (q * q), Rational(4) / q};
}

void QuotientPoint::validate(double tol) const {
  double s = std::norm(z[0]) + std::norm(z[1]);
  if (!(std::abs(s - 1.0) <= tol)) throw std::invalid_argument("need |z1|^2 + |z2|^2 = 1");
}

WilkingDisplacement wilking_displacement_bound(const QuotientPoint& p, int theta_grid) {
  p.validate();
  if (theta_grid < 8) throw std::invalid_argument("theta grid too coarse");
  using C = std::complex<double>;
  const auto& z = p.z;
  auto D = [&](double t) {
    C e = std::polar(1.0, t), e_pi = -e;
    C a1 = e * std::conj(z[1]), a2 = e_pi * std::conj(z[0]);
    C b1 = e * std::conj(z[3]), b2 = e_pi * std::conj(z[2]);
    double inner = (a1 * std::conj(z[0]) + a2 * std::conj(z[1])).real();
    double ds = std::acos(std::clamp(inner, -1.0, 1.0));
    double dr2 = std::norm(b1 - z[2]) + std::norm(b2 - z[3]);
    return std::sqrt(ds * ds + dr2);
  };
  double step = 2 * kPi / theta_grid;
  int best = 0;
  double best_val = D(0.0);
  for (int k = 1; k < theta_grid; ++k) {
    double v = D(k * step);
    if (v < best_val) best_val = v, best = k;
  }
  double lo = (best - 1) * step, hi = (best + 1) * step;
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - ratio * (hi - lo), d = lo + ratio * (hi - lo);
  double fc = D(c), fd = D(d);
  int it = 0;
  for (; it < 200 && hi - lo > 1e-13; ++it) {
    if (fc < fd) {
      hi = d, d = c, fd = fc;
      c = hi - ratio * (hi - lo), fc = D(c);
    } else {
      lo = c, c = d, fc = fd;
      d = lo + ratio * (hi - lo), fd = D(d);
    }
  }
  if (hi - lo > 1e-9) throw std::runtime_error("theta refinement did not converge");
  WilkingDisplacement out;
  double t = 0.5 * (lo + hi);
  out.displacement = std::min({best_val, fc, fd, D(t)});
  out.theta = out.displacement == best_val ? best * step : t;
  out.lower_bound = std::sqrt(0.5) * std::sqrt(std::norm(z[2]) + std::norm(z[3]));
  out.margin = out.displacement - out.lower_bound;
  return out;
}

}  // namespace covspec::curvature
