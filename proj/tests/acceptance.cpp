// Acceptance run: one PASS/FAIL line per criterion. Criteria that name a CLI
// command go through the C API; the rest use the core library directly, with
// independent oracles from the test helpers.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <complex>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "covspec/covspec.h"
#include "core/lattice.hpp"
#include "curvature/curvature.hpp"
#include "graph/covering.hpp"
#include "graph_oracles.hpp"
#include "model/spaces.hpp"
#include "model/warped_geodesic.hpp"
#include "model_oracles.hpp"
#include "rescaled/models.hpp"
#include "tower/slipping.hpp"

using namespace covspec;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Collects failed checks; the first few go into the report line.
struct Check {
  std::vector<std::string> failures;
  std::ostringstream detail;

  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void api(covspec_status s, const std::string& what) {
    (*this)(s == COVSPEC_OK, what + ": " + covspec_last_error());
  }
};

std::vector<std::string> symbols(const covspec_spectrum* s) {
  std::vector<std::string> out;
  for (size_t i = 0; i < covspec_spectrum_size(s); ++i) out.emplace_back(covspec_spectrum_symbolic(s, i));
  return out;
}

std::vector<double> values(const covspec_spectrum* s) {
  std::vector<double> out;
  for (size_t i = 0; i < covspec_spectrum_size(s); ++i) {
    double v = 0;
    covspec_spectrum_value(s, i, &v, nullptr, nullptr);
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out + "}";
}

void torus(Check& c) {
  const char* d[] = {"3", "2", "1"};
  covspec_spectrum* s = nullptr;
  c.api(covspec_torus_spectrum(d, 3, &s), "torus");
  if (!s) return;
  auto sym = symbols(s);
  c(sym == std::vector<std::string>{"1", "2", "3"}, "spectrum " + join(sym));
  for (size_t i = 0; i < covspec_spectrum_size(s); ++i) {
    covspec_provenance p = COVSPEC_NUMERIC;
    double tol = 1;
    covspec_spectrum_value(s, i, nullptr, &p, &tol);
    c(p == COVSPEC_EXACT && tol == 0.0, "value not exact");
  }
  c.detail << "spectrum " << join(sym);
  covspec_spectrum_free(s);
}

void wedge(Check& c) {
  covspec_graph* g = nullptr;
  c.api(covspec_graph_preset("harmonic-wedge", 50, &g), "preset");
  if (!g) return;
  covspec_spectrum* s = nullptr;
  int truncated = 0;
  c.api(covspec_graph_spectrum(g, nullptr, &s, &truncated), "spectrum");
  covspec_graph_free(g);
  if (!s) return;
  // Expected exact values pi (1 + 1/j), j = 50 .. 1 ascending.
  std::vector<std::string> expect;
  for (int j = 50; j >= 1; --j) expect.push_back(ExactLength(0, Rational(j + 1, j)).to_string());
  auto sym = symbols(s);
  c(sym == expect, "exact values differ, got " + std::to_string(sym.size()));
  c(!truncated, "truncated");
  bool near_pi = false;
  double acc = 0, radius = 0;
  for (size_t i = 0; i < covspec_spectrum_accumulation_count(s); ++i) {
    covspec_spectrum_accumulation(s, i, &acc, &radius);
    if (std::abs(acc - kPi) <= 1e-6) near_pi = true;
  }
  c(near_pi, "no accumulation point within 1e-6 of pi");
  c.detail << sym.size() << " exact values " << sym.front() << " .. " << sym.back() << ", accumulation "
           << std::setprecision(10) << acc;
  covspec_spectrum_free(s);
}

void warped_cylinder(Check& c) {
  covspec_cylinder* cyl = nullptr;
  c.api(covspec_cylinder_compute("1+exp(-r^2)", "2*pi", 4, &cyl), "cylinder");
  if (!cyl) return;
  auto v = values(covspec_cylinder_spectrum(cyl));
  c(v.size() == 1 && std::abs(v[0] - kPi) <= 1e-3, "spectrum is not {pi}");
  long power = 0;
  double len = 0, arg = 0;
  int attained = 1;
  c.api(covspec_cylinder_length(cyl, 0, &power, &len, &attained, &arg), "length");
  c(power == 1 && std::abs(len - 2 * kPi) <= 1e-4, "L(g) != 2 pi");
  c(attained == 0, "L(g) reported attained");
  covspec_cylinder_free(cyl);

  // F(r, 2 pi) > 2 pi: library profile and the variational oracle.
  auto f = model::WarpFunction::parse("1+exp(-r^2)");
  auto rep = model::covspec_warped_cylinder(f, Length(ExactLength(0, 2)));
  // Strict only where 1 + exp(-r^2) differs from 1 in double precision;
  // beyond that the gap is below the floating point resolution of 2 pi.
  double least = kInf;
  int strict = 0;
  for (const auto& [x, F] : rep.generator_profile) {
    c(F >= 2 * kPi, "F below 2 pi at r = " + std::to_string(x));
    if (f(x) > 1.0) {
      ++strict;
      least = std::min(least, F - 2 * kPi);
      c(F > 2 * kPi, "F = 2 pi at r = " + std::to_string(x));
    }
  }
  c(strict >= 20, "too few resolvable samples");
  oracle::Plane p;
  p.f = [](double x) { return 1 + std::exp(-x * x); };
  double oracle_least = kInf;
  for (double x : {0.0, 1.0, 2.0, 4.0}) {
    oracle_least = std::min(oracle_least, oracle::variational_distance(p, x, x, 2 * kPi, 3) - 2 * kPi);
  }
  c(oracle_least > 0, "oracle F <= 2 pi");
  c.detail << "CovSpec {" << std::setprecision(12) << (v.empty() ? 0 : v[0]) << "}, L(g) " << len
           << " attained=false, F > 2pi at " << strict << " resolvable r (least gap " << std::setprecision(3)
           << least << "), F >= 2pi at all " << rep.generator_profile.size();
}

void cusp(Check& c) {
  covspec_cylinder* cyl = nullptr;
  c.api(covspec_cylinder_preset("cusp-cylinder", &cyl), "cusp preset");
  if (!cyl) return;
  c(covspec_spectrum_size(covspec_cylinder_spectrum(cyl)) == 0, "spectrum not empty");
  c(covspec_cylinder_generator_slipping(cyl) == 1, "generator not slipping");
  covspec_cylinder_free(cyl);
  c.detail << "CovSpec empty, generator slipping: yes";
}

void cone_hyperboloid(Check& c) {
  const char* base[] = {"pi/sqrt(2)"};
  covspec_spectrum *inf = nullptr, *bp = nullptr;
  c.api(covspec_cone_spectra("1", base, 1, "pi/sqrt(2)", &inf, &bp), "cone");
  if (inf) {
    c(symbols(inf) == std::vector<std::string>{"1"}, "cone infinity spectrum " + join(symbols(inf)));
    c(covspec_spectrum_size(bp) == 0 && covspec_spectrum_accumulation_count(bp) == 0, "cone basepoint spectrum");
  }
  covspec_spectrum_free(inf);
  covspec_spectrum_free(bp);

  auto t0 = std::chrono::steady_clock::now();
  const double z = 1e3;
  // Library: shooting solver at (z, pi), the far side of the fiber.
  auto h = rescaled::hyperboloid();
  rescaled::Point far{z, kPi};
  double lib = h->displacement(1, far) / h->distance(h->basepoint(), far);
  // Oracle: discretized paths on the revolution surface, no shooting.
  oracle::Plane p;
  p.f = [](double x) { return std::sqrt(x * x + 1); };
  p.g = [](double x) { return 1.0 + x * x / (x * x + 1); };
  double disp = oracle::variational_distance(p, z, z, 2 * kPi, -z);
  double dist = oracle::variational_distance(p, 0.0, z, kPi, 1.0);
  double ratio = disp / dist;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c(std::abs(ratio - 2) <= 5e-2, "oracle ratio " + std::to_string(ratio));
  c(std::abs(lib - 2) <= 5e-2, "solver ratio " + std::to_string(lib));
  c(secs <= 60, "too slow");

  covspec_model* m = nullptr;
  c.api(covspec_model_preset("hyperboloid", &m), "hyperboloid");
  covspec_length_report r{};
  c.api(covspec_rescaled_length(m, 1, COVSPEC_INFINITY, 0, &r), "length");
  c(r.exact && std::string(r.symbolic) == "2", "L^inf(g) != 2");
  covspec_model_free(m);
  c.detail << "cone {1} exact, basepoint empty; hyperboloid ratio at z=1e3: oracle " << std::setprecision(6) << ratio
           << ", solver " << lib << " (" << std::setprecision(2) << secs << " s)";
}

void asymptotic(Check& c) {
  double worst = 0;
  for (const char* k : {"1/2", "1", "2"}) {
    double kv = 0;
    covspec_parse_length(k, &kv, nullptr, 0);
    std::string f = std::string(k) + "*r";
    for (double d : {kPi / 4, kPi / 2, kPi}) {
      double r = 1e4, out = 0;
      c.api(covspec_warped_ratio(f.c_str(), d, &r, 1, &out), "ratio");
      double expect = std::sqrt(2 - 2 * std::cos(std::min(kPi, kv * d)));
      worst = std::max(worst, std::abs(out - expect));
      c(std::abs(out - expect) <= 1e-2, f + " off");
    }
  }
  double r = 1e6, out = 0;
  c.api(covspec_warped_ratio("sqrt(r)", kPi, &r, 1, &out), "sqrt ratio");
  c(out < 1e-2, "sqrt(r) ratio " + std::to_string(out));
  c.detail << "9 cone cases within " << std::setprecision(3) << worst << ", sqrt(r) ratio " << out;
}

void pants(Check& c) {
  covspec_tower* t = nullptr;
  c.api(covspec_tower_preset("pants", 12, &t), "pants");
  if (!t) return;
  auto core = tower::pants_tower(12);
  int checked = 0;
  for (int i = 0; i <= 6; ++i) {
    for (size_t j = 0; j < covspec_tower_generator_count(t, i); ++j) {
      const char* name = covspec_tower_generator_name(t, i, j);
      covspec_verdict uni = COVSPEC_NO, slip = COVSPEC_YES;
      double resolved = 0;
      int witness = 0;
      c.api(covspec_tower_universal_slipping(t, i, name, 2 * kPi, 10, &uni, &resolved), name);
      c.api(covspec_tower_slipping(t, i, name, 2 * kPi / 1024, &slip, &witness), name);
      c(uni == COVSPEC_YES && resolved <= 2 * kPi / 1024 * (1 + 1e-12), std::string(name) + " not universal");
      c(slip == COVSPEC_NO, std::string(name) + " slips");
      auto lengths = tower::tower_translation_length(core, {i, core.parse_element(i, name)});
      ExactLength expect(0, Rational(2) / Rational(1 << i));
      for (const auto& l : lengths.per_level) c(l.exact && *l.exact == expect, std::string(name) + " length");
      ++checked;
    }
  }
  covspec_cover_summary s{};
  c.api(covspec_tower_cover_summary(t, 10, &s), "summary");
  std::string q = s.quotient_identity;
  c(s.pi_slip_full == 1, "pi_slip is not the full group");
  c(q.size() >= 4 && q.substr(q.size() - 4) == " = X", "universal delta cover is not X: " + q);
  covspec_tower_free(t);
  c.detail << checked << " generators universal-slipping to 2pi/2^10, none slipping; pi_slip full, " << q;
}

void lemmas(Check& c) {
  for (const char* preset : {"flat-cylinder", "hyperboloid", "cone", "moebius", "nabonnand"}) {
    covspec_suite_result r{};
    c.api(covspec_verify_rescaled_lemmas(preset, &r), preset);
    c(r.pass == 1, std::string(preset) + ": " + r.message);
    c.detail << preset << " " << r.checks << " ";
  }
  c.detail << "checks";
}

void moebius(Check& c) {
  covspec_model* m = nullptr;
  c.api(covspec_model_preset("moebius", &m), "moebius");
  if (!m) return;
  covspec_spectrum* s = nullptr;
  c.api(covspec_rescaled_spectrum(m, COVSPEC_INFINITY, 6, &s), "spectrum");
  c(s && symbols(s) == std::vector<std::string>{"1"}, "spectrum is not {1}");
  covspec_spectrum_free(s);
  covspec_length_report g{}, g2{};
  c.api(covspec_rescaled_length(m, 1, COVSPEC_INFINITY, 1, &g), "g");
  c.api(covspec_rescaled_length(m, 2, COVSPEC_INFINITY, 1, &g2), "g^2");
  c(std::abs(g.value - 2) <= 1e-6 && g.has_numeric && std::abs(g.numeric - 2) <= 1e-6, "L(g) != 2");
  c(g2.value < 1e-4 && g2.has_numeric && g2.numeric < 1e-4, "L(g^2) not small");
  covspec_model_free(m);
  c.detail << "spectrum {1}, L(g) " << std::setprecision(12) << g.numeric << ", L(g^2) " << std::setprecision(3)
           << g2.numeric;
}

void covofshift(Check& c) {
  std::mt19937 rng(50);
  std::size_t compared = 0;
  for (int t = 0; t < 50; ++t) {
    auto g = oracle::random_graph(rng, 6);
    graph::FreeBasis b(g);
    auto rep = graph::covofshift_check(g);
    c(rep.pass, "library reports a violation on graph " + std::to_string(t));
    if (b.rank() == 0) continue;
    // The spectrum of a finite graph is finite, so its lower semiclosure is
    // itself: each value must be half a translation length found by words.
    ExactLength bound(0);
    for (const auto& v : rep.covering.values()) bound = std::max(bound, *v.exact * Rational(2));
    auto halves = oracle::half_shift_by_words(b, 8, bound);
    for (const auto& v : rep.covering.values()) {
      ++compared;
      c(halves.count(*v.exact) == 1, "graph " + std::to_string(t) + ": " + v.exact->to_string() + " missing");
    }
  }
  covspec_suite_result r{};
  c.api(covspec_verify_covofshift(50, 3, &r), "suite");
  c(r.pass == 1 && r.worst == 0, "suite violations");
  c.detail << compared << " values matched by words of length <= 8; suite " << r.checks << " graphs, 0 violations";
}

void wilking(Check& c) {
  auto k0 = curvature::wilking_curvature_exact(Rational(0));
  auto k1 = curvature::wilking_curvature_exact(Rational(1));
  c(k0.first == 4 && k0.second == 4, "curvature at 0");
  c(k1.first == 1 && k1.second == 2, "curvature at 1");
  double radial = 0, fiber = 0;
  c.api(covspec_wilking_curvature(1, &radial, &fiber), "curvature");
  c(radial == 1 && fiber == 2, "api curvature at 1");

  covspec_suite_result r{};
  c.api(covspec_verify_wilking(100, 7, &r), "suite");
  c(r.pass == 1 && r.checks == 100, "random margins");

  // |(z3, z4)| = 1e3 along several directions, cross-checked by a dense scan.
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  double worst_ratio = kInf;
  for (int i = 0; i < 8; ++i) {
    std::complex<double> z1(gauss(rng), gauss(rng)), z2(gauss(rng), gauss(rng));
    std::complex<double> z3(gauss(rng), gauss(rng)), z4(gauss(rng), gauss(rng));
    double n12 = std::sqrt(std::norm(z1) + std::norm(z2)), n34 = std::sqrt(std::norm(z3) + std::norm(z4));
    curvature::QuotientPoint p{{z1 / n12, z2 / n12, z3 * (1e3 / n34), z4 * (1e3 / n34)}};
    auto w = curvature::wilking_displacement_bound(p);
    double ratio = w.displacement / 1e3;
    worst_ratio = std::min(worst_ratio, ratio);
    c(ratio >= std::sqrt(0.5) - 1e-3, "ratio below sqrt(2)/2");
    double scan = kInf;
    for (int k = 0; k < 200000; ++k) {
      double th = 2 * kPi * k / 200000;
      std::complex<double> e = std::polar(1.0, th);
      auto a1 = e * std::conj(p.z[1]), a2 = -e * std::conj(p.z[0]);
      auto b1 = e * std::conj(p.z[3]), b2 = -e * std::conj(p.z[2]);
      double inner = (a1 * std::conj(p.z[0]) + a2 * std::conj(p.z[1])).real();
      double ds = std::acos(std::clamp(inner, -1.0, 1.0));
      scan = std::min(scan, std::sqrt(ds * ds + std::norm(b1 - p.z[2]) + std::norm(b2 - p.z[3])));
    }
    c(w.displacement <= scan + 1e-9 && w.displacement >= scan - 1e-3, "golden section disagrees with scan");
  }
  c.detail << "(4,4) and (1,2) exact; 100 margins >= " << std::setprecision(4) << r.worst << "; ratio at 1e3 >= "
           << std::setprecision(6) << worst_ratio;
}

void milnor(Check& c) {
  c(curvature::milnor_bound_exact(2, Rational(1)) == 18, "exact bound");
  double v = 0;
  char sym[32] = {0};
  c.api(covspec_milnor_bound(2, "1", &v, sym, sizeof sym), "milnor");
  c(v == 18 && std::string(sym) == "18", "api bound");
  int cases = 0;
  long most = 0;
  for (double delta : {2.0, 1.0, 0.5, 0.25, 0.1}) {
    for (double eps_frac : {0.0, 0.5}) {
      for (double C : {0.0, 1.0}) {
        double eps = eps_frac * delta, rho = 1.0 + cases % 3;
        double a = rho * (delta - eps), b = C + rho * (2 + delta - eps);
        auto centers = curvature::lattice_ball_packing(2, a, b);
        // Disjoint disks inside the big disk, checked pairwise.
        for (std::size_t i = 0; i < centers.size(); ++i) {
          c(std::hypot(centers[i][0], centers[i][1]) + a <= b * (1 + 1e-12), "disk outside");
          for (std::size_t j = i + 1; j < centers.size(); ++j) {
            c(std::hypot(centers[i][0] - centers[j][0], centers[i][1] - centers[j][1]) >= 2 * a * (1 - 1e-12),
              "disks overlap");
          }
        }
        long n = static_cast<long>(centers.size());
        most = std::max(most, n);
        c(n >= 1 && curvature::packing_inequality_check(2, delta, eps, C, rho, n), "packing exceeds the bound");
        ++cases;
      }
    }
  }
  c(cases == 20, "grid size");
  c.detail << "milnor_bound(2,1) = 18; " << cases << " plane packings within bounds (largest " << most << " disks)";
}

void transfer(Check& c) {
  auto fiber = lattice_covering_spectrum({ExactLength(3), ExactLength(2)});
  auto rep = curvature::berard_bergery_covspec(model::WarpFunction::parse("1 + exp(-r)"), fiber);
  std::vector<std::string> got, base;
  for (const auto& v : rep.spectrum.values()) got.push_back(v.symbolic());
  for (const auto& v : fiber.values()) base.push_back(v.symbolic());
  c(got == std::vector<std::string>{"2", "3"}, "transfer " + join(got));
  c(got == base, "differs from the fiber");
  c(!rep.infimum_attained, "infimum reported attained");
  c.detail << "CovSpec " << join(got) << " = fiber spectrum";
}

void oracles(Check& c) {
  struct Case {
    const char* f;
    double x1, x2, d;
    bool half, revolution;
    double bump;
  };
  const Case cases[] = {
      {"r", 4, 4, 1.5, true, false, -4},       {"r", 2, 2, 2.8, true, false, -2},
      {"r", 1, 3, 1, true, false, -1},         {"2*r", 1, 1, 1, true, false, -1},
      {"1/2*r", 3, 3, 4, true, false, -3},     {"r + 1", 2, 2, 3, true, false, -2},
      {"1 + exp(-r^2)", 0.25, 0.25, 2 * kPi, false, false, 3},
      {"1 + exp(-r^2)", 2, 2, 2 * kPi, false, false, 3},
      {"1 + exp(-r^2)", -0.5, 1, 1, false, false, 1},
      {"1 + exp(-r^2)", 0, 2, 4, false, false, 2},
      {"r^2 + 1", 0.5, 0.5, 2, false, false, -1},
      {"r^2 + 1", 1, 2, 0.5, false, false, -1},
      {"2 + cos(r)", 0.5, 0.5, 3, false, false, 3},
      {"2 + cos(r)", 0, 2, 1.5, false, false, 2},
      {"exp(r)", 0.5, 0.5, 1.5, false, false, -2},
      {"exp(-r)", 0, 0, 2, false, false, 2},
      {"sqrt(r^2 + 1)", 3, 3, 2 * kPi, false, true, -3},
      {"sqrt(r^2 + 1)", 0.5, 0.5, 3, false, true, -1},
      {"sqrt(r^2 + 1)", 0, 2, 1, false, true, -1},
      {"sqrt(r^2 + 4)", 1, 1, 2, false, true, -1},
  };
  double worst = 0;
  for (const auto& k : cases) {
    auto f = model::WarpFunction::parse(k.f);
    auto plane = k.revolution ? model::WarpedPlane::revolution(f)
                 : k.half     ? model::WarpedPlane::warped(f, 0.0, kInf, f(0.0) > 0.0)
                              : model::WarpedPlane::warped(f, -kInf, kInf);
    double shoot = model::warped_distance(plane, k.x1, k.x2, k.d).length;
    oracle::Plane p;
    p.f = [&](double x) { return f(k.half ? std::abs(x) : x); };
    if (k.revolution) {
      p.g = [&](double x) {
        double h = 1e-5, s = (f(x + h) - f(x - h)) / (2 * h);
        return 1.0 + s * s;
      };
    }
    double var = oracle::variational_distance(p, k.x1, k.x2, k.d, k.bump);
    double rel = std::abs(shoot - var) / var;
    worst = std::max(worst, rel);
    c(rel <= 1e-6, std::string(k.f) + " shooting vs variational " + std::to_string(rel));
  }

  std::vector<model::WarpFunction> fs;
  for (const auto& name : model::model_preset_names()) fs.push_back(model::model_preset(name).plane.f);
  double worst_fd = 0;
  for (const auto& f : fs) {
    for (double x : {0.3, 1.0, 2.5}) {
      double h = 1e-4;
      double fd1 = (f(x + h) - f(x - h)) / (2 * h);
      double fd2 = (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
      double e1 = std::abs(f.d1(x) - fd1) / std::max(1.0, std::abs(fd1));
      double e2 = std::abs(f.d2(x) - fd2) / std::max(1.0, std::abs(fd2));
      worst_fd = std::max({worst_fd, e1, e2});
      c(e1 <= 1e-5 && e2 <= 1e-5, f.text() + " derivative mismatch");
    }
  }
  c.detail << "20 geodesic cases, worst relative gap " << std::setprecision(2) << worst << "; " << fs.size()
           << " preset warps, worst derivative gap " << worst_fd;
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"torus spectra", torus},
      {"harmonic wedge J=50", wedge},
      {"warped cylinder 1+exp(-r^2)", warped_cylinder},
      {"cusp cylinder", cusp},
      {"cone and hyperboloid", cone_hyperboloid},
      {"asymptotic F(r,d)/r limits", asymptotic},
      {"pants tower", pants},
      {"rescaled lemma suite", lemmas},
      {"moebius spectrum", moebius},
      {"covofshift on random graphs", covofshift},
      {"wilking quotient", wilking},
      {"milnor and packing bounds", milnor},
      {"transfer through a warp to 1", transfer},
      {"oracle cross-checks", oracles},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = c.failures.empty();
    failed += pass ? 0 : 1;
    std::printf("%s %2zu %s: %s [%.1fs]\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                pass ? c.detail.str().c_str() : c.failures.front().c_str(), secs);
    for (std::size_t k = 1; k < c.failures.size() && k < 5; ++k) std::printf("       %s\n", c.failures[k].c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
