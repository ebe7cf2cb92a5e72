#include "core/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace covspec {

std::vector<LatticeElement> hermite_normal_form(std::vector<LatticeElement> rows, std::size_t dim) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < dim && pivot_row < rows.size(); ++col) {
    // Euclid on column `col` among rows >= pivot_row.
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (!best || std::llabs(rows[r][col]) < std::llabs(rows[*best][col])) best = r;
      }
      if (!best) break;
      std::swap(rows[pivot_row], rows[*best]);
      bool reduced_any = false;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        long long q = rows[r][col] / rows[pivot_row][col];
        for (std::size_t c = 0; c < dim; ++c) rows[r][c] -= q * rows[pivot_row][c];
        reduced_any = reduced_any || rows[r][col] != 0;
      }
      if (!reduced_any) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
    }
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t r = 0; r < pivot_row; ++r) {
      long long p = rows[pivot_row][col];
      long long q = rows[r][col] / p;
      if (rows[r][col] - q * p < 0) --q;
      if (q != 0) {
        for (std::size_t c = 0; c < dim; ++c) rows[r][c] -= q * rows[pivot_row][c];
      }
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

double lattice_shift_length(const LatticeElement& v, const std::vector<double>& r) {
  if (v.size() != r.size()) throw std::invalid_argument("lattice element and diameter vector differ in dimension");
  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double t = 2.0 * r[i] * static_cast<double>(v[i]);
    s += t * t;
  }
  return std::sqrt(s);
}

namespace {

/// Coefficients of each diameter and delta relative to a common unit, or
/// nothing when no such unit exists.
std::optional<std::pair<std::vector<Rational>, Rational>> common_unit(const std::vector<ExactLength>& r,
                                                                       const ExactLength& delta) {
  auto all_rational = std::all_of(r.begin(), r.end(), [](const ExactLength& e) { return e.is_rational(); }) &&
                      delta.is_rational();
  auto all_pi = std::all_of(r.begin(), r.end(), [](const ExactLength& e) { return e.rational_part() == 0; }) &&
                delta.rational_part() == 0;
  if (!all_rational && !all_pi) return std::nullopt;
  std::vector<Rational> coeffs;
  for (const auto& e : r) coeffs.push_back(all_rational ? e.rational_part() : e.pi_part());
  return std::make_pair(coeffs, all_rational ? delta.rational_part() : delta.pi_part());
}

}  // namespace

std::vector<LatticeElement> short_vector_sublattice(const std::vector<ExactLength>& r, const ExactLength& delta,
                                                    std::size_t box_budget) {
  std::size_t k = r.size();
  auto unit = common_unit(r, delta);
  std::vector<double> rd;
  for (const auto& e : r) rd.push_back(e.to_double());
  double dd = delta.to_double();

  // |v_i| * 2 r_i <= |v| < 2 delta  =>  |v_i| < delta / r_i.
  std::vector<long long> bound(k);
  double box = 1;
  for (std::size_t i = 0; i < k; ++i) {
    bound[i] = static_cast<long long>(std::floor(dd / rd[i]));
    if (static_cast<double>(bound[i]) * rd[i] >= dd) --bound[i];
    bound[i] = std::max(0LL, bound[i]);
    box *= static_cast<double>(2 * bound[i] + 1);
  }
  if (box > static_cast<double>(box_budget)) throw std::runtime_error("lattice enumeration box exceeds budget");

  auto is_short = [&](const LatticeElement& v) {
    if (unit) {
      const auto& [coeffs, dcoef] = *unit;
      Rational s = 0;
      for (std::size_t i = 0; i < k; ++i) s += coeffs[i] * coeffs[i] * Rational(v[i] * v[i]);
      return s < dcoef * dcoef;  // |v|^2 / 4 < delta^2 in the common unit
    }
    return lattice_shift_length(v, rd) < 2 * dd * (1 - 1e-12);
  };

  std::vector<LatticeElement> gens;
  LatticeElement v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = -bound[i];
  if (k == 0) return {};
  while (true) {
    bool nonzero = std::any_of(v.begin(), v.end(), [](long long x) { return x != 0; });
    if (nonzero && is_short(v)) gens.push_back(v);
    std::size_t i = 0;
    while (i < k && v[i] == bound[i]) {
      v[i] = -bound[i];
      ++i;
    }
    if (i == k) break;
    ++v[i];
  }
  return hermite_normal_form(std::move(gens), k);
}

Spectrum lattice_covering_spectrum(const std::vector<ExactLength>& r) {
  Spectrum out;
  if (r.empty()) return out;
  for (const auto& e : r) {
    if (e.sign() <= 0) throw std::invalid_argument("circle diameters must be positive");
  }
  std::vector<ExactLength> candidates = r;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const ExactLength& delta = candidates[i];
    // Probe just above delta: the midpoint to the next candidate, or
    // 3/2 delta past the last one. No breakpoint lies strictly between.
    ExactLength above = i + 1 < candidates.size() ? (delta + candidates[i + 1]) / Rational(2)
                                                  : delta * Rational(3, 2);
    if (short_vector_sublattice(r, delta) != short_vector_sublattice(r, above)) {
      out.add_exact(delta);
    }
  }
  out.complete_below = std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace covspec
