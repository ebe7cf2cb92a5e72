#include "core/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace covspec {

std::string Provenance::to_string() const {
  switch (kind) {
    case ProvenanceKind::kExact:
      return "exact";
    case ProvenanceKind::kNumeric: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "numeric(%.1e)", tolerance);
      return buf;
    }
    case ProvenanceKind::kUndetermined:
      return "undetermined";
  }
  return "?";
}

namespace {

bool same_value(const SpectrumValue& a, const SpectrumValue& b) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  double tol = std::max({a.provenance.tolerance, b.provenance.tolerance, 1e-12});
  return std::abs(a.value - b.value) <= tol * std::max(1.0, std::abs(a.value));
}

}  // namespace

void Spectrum::add(SpectrumValue v) {
  for (auto& existing : values_) {
    if (same_value(existing, v)) {
      // An exact witness wins over a numeric one for the same point.
      if (!existing.exact && v.exact) existing = std::move(v);
      return;
    }
  }
  auto pos = std::lower_bound(values_.begin(), values_.end(), v,
                              [](const SpectrumValue& a, const SpectrumValue& b) {
                                if (a.exact && b.exact) return *a.exact < *b.exact;
                                return a.value < b.value;
                              });
  values_.insert(pos, std::move(v));
}

void Spectrum::add_exact(const ExactLength& e, std::string note) {
  add(SpectrumValue{e.to_double(), e, Provenance::exact(), std::move(note)});
}

void Spectrum::add_numeric(double value, double tol, std::string note) {
  add(SpectrumValue{value, std::nullopt, Provenance::numeric(tol), std::move(note)});
}

void Spectrum::add_undetermined(double value, std::string note) {
  add(SpectrumValue{value, std::nullopt, Provenance::undetermined(), std::move(note)});
}

void Spectrum::add_accumulation(AccumulationPoint p) {
  accumulation_.push_back(p);
  std::sort(accumulation_.begin(), accumulation_.end(),
            [](const auto& a, const auto& b) { return a.value < b.value; });
}

bool Spectrum::has_undetermined() const {
  return std::any_of(values_.begin(), values_.end(), [](const SpectrumValue& v) {
    return v.provenance.kind == ProvenanceKind::kUndetermined;
  });
}

std::vector<double> Spectrum::as_doubles() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.value);
  return out;
}

Spectrum Spectrum::scaled(double factor) const {
  Spectrum out;
  for (auto v : values_) {
    v.value *= factor;
    if (v.exact) v.exact.reset();
    out.values_.push_back(v);
  }
  for (auto a : accumulation_) {
    a.value *= factor;
    a.radius *= factor;
    out.accumulation_.push_back(a);
  }
  if (complete_below) out.complete_below = *complete_below * factor;
  out.notes = notes;
  return out;
}

std::optional<AccumulationPoint> detect_lower_accumulation(const std::vector<double>& ascending,
                                                           std::size_t min_tail) {
  std::size_t n = ascending.size();
  if (n < std::max<std::size_t>(min_tail, 3)) return std::nullopt;
  // Read the set as a decreasing sequence a_1 > a_2 > ... > a_n and require
  // the gaps a_k - a_{k+1} to shrink over the last min_tail terms.
  std::vector<double> a(ascending.rbegin(), ascending.rend());
  for (std::size_t k = n - min_tail; k + 2 < n; ++k) {
    double g0 = a[k] - a[k + 1];
    double g1 = a[k + 1] - a[k + 2];
    if (!(g0 > 0 && g1 > 0 && g1 < g0)) return std::nullopt;
  }
  // Richardson on a_m = L + c/m + d/m^2 using the last three ranks.
  auto m = [&](std::size_t idx) { return static_cast<double>(idx + 1); };
  std::size_t i = n - 3, j = n - 2, k = n - 1;
  double mi = m(i), mj = m(j), mk = m(k);
  // Solve the 3x3 system for L via Lagrange extrapolation in t = 1/m to t = 0.
  double ti = 1 / mi, tj = 1 / mj, tk = 1 / mk;
  double li = (0 - tj) * (0 - tk) / ((ti - tj) * (ti - tk));
  double lj = (0 - ti) * (0 - tk) / ((tj - ti) * (tj - tk));
  double lk = (0 - ti) * (0 - tj) / ((tk - ti) * (tk - tj));
  double order2 = li * a[i] + lj * a[j] + lk * a[k];
  // First-order estimate from the last two ranks gives the confidence radius.
  double order1 = (mk * a[k] - mj * a[j]) / (mk - mj);
  AccumulationPoint p;
  p.value = order2;
  p.radius = std::abs(order2 - order1);
  return p;
}

bool in_lower_semiclosure(double x, const std::vector<double>& set,
                          const std::vector<AccumulationPoint>& accumulation, double tol) {
  for (double s : set) {
    if (std::abs(s - x) <= tol * std::max(1.0, std::abs(x))) return true;
  }
  for (const auto& a : accumulation) {
    if (std::abs(a.value - x) <= std::max(tol, a.radius)) return true;
  }
  return false;
}

Spectrum cyclic_filtration_spectrum(const std::vector<PowerLength>& lengths, double numeric_tol, double tie_tol) {
  Spectrum out;
  out.complete_below = std::numeric_limits<double>::infinity();
  std::vector<const PowerLength*> order;
  for (const auto& l : lengths) order.push_back(&l);
  std::stable_sort(order.begin(), order.end(), [](const PowerLength* a, const PowerLength* b) { return a->value < b->value; });
  long g = 0;
  std::size_t pos = 0;
  while (pos < order.size() && order[pos]->value == 0.0) g = std::gcd(g, std::abs(order[pos++]->power));
  while (pos < order.size() && g != 1) {
    const PowerLength* first = order[pos];
    long next = g;
    bool undetermined = false;
    while (pos < order.size() && order[pos]->value <= first->value * (1.0 + tie_tol)) {
      next = std::gcd(next, std::abs(order[pos]->power));
      undetermined = undetermined || order[pos]->undetermined;
      ++pos;
    }
    if (next != g) {
      std::string note = "half the length of g^" + std::to_string(first->power);
      if (undetermined) {
        out.add_undetermined(first->value / 2, note);
      } else if (first->exact) {
        out.add_exact(*first->exact / 2, note);
      } else {
        out.add_numeric(first->value / 2, numeric_tol, note);
      }
    }
    g = next;
  }
  return out;
}

}  // namespace covspec
