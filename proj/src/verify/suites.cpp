#include "verify/suites.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "curvature/curvature.hpp"
#include "graph/covering.hpp"
#include "graph/metric_graph.hpp"
#include "rescaled/rescaled.hpp"

namespace covspec::verify {

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  pass = false;
  messages.push_back(what);
}

SuiteResult verify_wilking(int samples, std::uint64_t seed) {
  constexpr double kPi = std::numbers::pi;
  SuiteResult out;
  out.worst = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < samples; ++i) {
    std::complex<double> z1(gauss(rng), gauss(rng)), z2(gauss(rng), gauss(rng));
    double s = std::sqrt(std::norm(z1) + std::norm(z2));
    double radius = 1e3 * unit(rng), phi = 0.5 * kPi * unit(rng);
    curvature::QuotientPoint p{{z1 / s, z2 / s, std::polar(radius * std::cos(phi), 2 * kPi * unit(rng)),
                                std::polar(radius * std::sin(phi), 2 * kPi * unit(rng))}};
    auto w = curvature::wilking_displacement_bound(p);
    out.worst = std::min(out.worst, w.margin);
    out.check(w.margin >= -1e-6, "sample " + std::to_string(i) + ": margin " + std::to_string(w.margin));
  }
  return out;
}

SuiteResult verify_covofshift(int graphs, std::uint64_t seed) {
  SuiteResult out;
  for (int i = 0; i < graphs; ++i) {
    auto g = graph::random_metric_graph(seed * 1000003ULL + static_cast<std::uint64_t>(i), 6);
    auto rep = graph::covofshift_check(g);
    out.worst += static_cast<double>(rep.violations.size());
    out.check(rep.pass, "graph " + std::to_string(i) + ": " + std::to_string(rep.violations.size()) + " violations");
  }
  return out;
}

SuiteResult verify_rescaled_lemmas(const std::string& preset, long max_power) {
  using namespace rescaled;
  SuiteResult out;
  RescaledOptions opts;
  opts.max_power = max_power;
  auto s = rescaled_preset(preset);
  auto note = [&](double dev) { out.worst = std::max(out.worst, dev); };
  for (long n = 1; n <= max_power; ++n) {
    std::string tag = preset + " g^" + std::to_string(n) + ": ";
    auto b = rescaled_length_basepoint(*s, n, opts);
    auto i = rescaled_length_infinity(*s, n, opts);
    out.check(b.value <= 2 + 1e-9 && i.value <= 2 + 1e-9, tag + "length above 2");
    note(std::max(0.0, b.value - i.value));
    out.check(i.value >= b.value - 1e-6, tag + "L^inf below L^x0");
    auto moved = s->with_basepoint(s->sample_points()[1]);
    double shift = std::abs(rescaled_length_infinity(*moved, n, opts).value - i.value);
    note(shift);
    out.check(shift < 1e-6, tag + "L^inf depends on the basepoint");
    if (s->complete()) out.check((b.value < 1e-6) == (i.value < 1e-6), tag + "zero iff zero fails");
    for (double R : {2.0, 10.0}) {
      auto big = s->scaled(R);
      auto bR = rescaled_length_basepoint(*big, n, opts);
      auto iR = rescaled_length_infinity(*big, n, opts);
      bool exact_ok = (!b.exact || (bR.exact && *bR.exact == *b.exact)) && (!i.exact || (iR.exact && *iR.exact == *i.exact));
      double dev = std::max(std::abs(bR.value - b.value), std::abs(iR.value - i.value));
      note(dev);
      out.check(exact_ok && dev < 1e-6, tag + "not scale invariant at R = " + std::to_string(R));
    }
  }
  return out;
}

}  // namespace covspec::verify
