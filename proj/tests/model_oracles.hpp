#pragma once

// Direct variational minimization of discretized paths in a warped plane.
// Shares nothing with the Clairaut shooting solver except the warp function.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

struct Plane {
  std::function<double(double)> f;
  std::function<double(double)> g = [](double) { return 1.0; };
};

// Path as a graph x(y) over n uniform steps of the fiber coordinate.
inline double path_length(const Plane& p, const std::vector<double>& x, double h) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    double m = 0.5 * (x[i] + x[i + 1]), u = x[i + 1] - x[i], fm = p.f(m);
    total += std::sqrt(p.g(m) * u * u + fm * fm * h * h);
  }
  return total;
}

inline double segment(const Plane& p, double a, double b, double h) {
  double m = 0.5 * (a + b), u = b - a, fm = p.f(m);
  return std::sqrt(p.g(m) * u * u + fm * fm * h * h);
}

// Damped Newton on interior nodes; the Hessian is tridiagonal.
inline void newton(const Plane& p, std::vector<double>& x, double h, int iters = 60) {
  std::size_t n = x.size();
  if (n < 3) return;
  double eta = 1e-5 * (1.0 + std::abs(x[0]));
  std::vector<double> grad(n, 0.0), diag(n, 0.0), off(n, 0.0);
  for (int it = 0; it < iters; ++it) {
    std::fill(grad.begin(), grad.end(), 0.0);
    std::fill(diag.begin(), diag.end(), 0.0);
    std::fill(off.begin(), off.end(), 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      double a = x[i], b = x[i + 1];
      auto s = [&](double da, double db) { return segment(p, a + da, b + db, h); };
      double s0 = s(0, 0);
      double sa = (s(eta, 0) - s(-eta, 0)) / (2 * eta);
      double sb = (s(0, eta) - s(0, -eta)) / (2 * eta);
      double saa = (s(eta, 0) - 2 * s0 + s(-eta, 0)) / (eta * eta);
      double sbb = (s(0, eta) - 2 * s0 + s(0, -eta)) / (eta * eta);
      double sab = (s(eta, eta) - s(eta, -eta) - s(-eta, eta) + s(-eta, -eta)) / (4 * eta * eta);
      grad[i] += sa;
      grad[i + 1] += sb;
      diag[i] += saa;
      diag[i + 1] += sbb;
      off[i] += sab;
    }
    // Thomas algorithm on nodes 1..n-2.
    std::vector<double> c(n, 0.0), d(n, 0.0), step(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      double lower = i > 1 ? off[i - 1] : 0.0;
      double denom = diag[i] - lower * (i > 1 ? c[i - 1] : 0.0);
      if (std::abs(denom) < 1e-300) denom = 1e-300;
      c[i] = off[i] / denom;
      d[i] = (-grad[i] - lower * (i > 1 ? d[i - 1] : 0.0)) / denom;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
      step[i] = d[i] - (i + 2 < n ? c[i] * step[i + 1] : 0.0);
      if (i == 1) break;
    }
    double before = path_length(p, x, h);
    double t = 1.0;
    std::vector<double> trial(x);
    for (int k = 0; k < 40; ++k, t *= 0.5) {
      for (std::size_t i = 1; i + 1 < n; ++i) trial[i] = x[i] + t * step[i];
      if (path_length(p, trial, h) <= before) break;
    }
    double moved = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) moved = std::max(moved, std::abs(trial[i] - x[i]));
    x = trial;
    if (moved < 1e-13 * (1.0 + std::abs(x[0]))) break;
  }
}

inline std::vector<double> refine(const std::vector<double>& x) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    out.push_back(x[i]);
    out.push_back(0.5 * (x[i] + x[i + 1]));
  }
  out.push_back(x.back());
  return out;
}

// Minimal length between (x1, 0) and (x2, dy). The start is the best of a
// family of sine bumps; `bump` bounds the amplitude scan.
inline double variational_distance(const Plane& p, double x1, double x2, double dy, double bump) {
  const double pi = 3.14159265358979323846;
  auto initial = [&](int n, double amp) {
    std::vector<double> x(n + 1);
    for (int i = 0; i <= n; ++i) {
      double t = static_cast<double>(i) / n;
      x[i] = x1 + (x2 - x1) * t + amp * std::sin(pi * t);
    }
    return x;
  };
  int n = 64;
  double best_amp = 0.0, best = path_length(p, initial(n, 0.0), dy / n);
  for (int k = -40; k <= 40; ++k) {
    double amp = bump * k / 40.0;
    double len = path_length(p, initial(n, amp), dy / n);
    if (len < best) best = len, best_amp = amp;
  }
  std::vector<double> x = initial(n, best_amp);
  double coarse = 0.0, fine = 0.0;
  while (true) {
    newton(p, x, dy / n);
    if (n == 512) coarse = path_length(p, x, dy / n);
    if (n == 1024) {
      fine = path_length(p, x, dy / n);
      break;
    }
    x = refine(x);
    n *= 2;
  }
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace oracle
