#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/exact_length.hpp"

namespace covspec {

enum class ProvenanceKind { kExact, kNumeric, kUndetermined };

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::kExact;
  double tolerance = 0.0;  // meaningful for kNumeric

  static Provenance exact() { return {ProvenanceKind::kExact, 0.0}; }
  static Provenance numeric(double tol) { return {ProvenanceKind::kNumeric, tol}; }
  static Provenance undetermined() { return {ProvenanceKind::kUndetermined, 0.0}; }

  std::string to_string() const;
};

struct SpectrumValue {
  double value = 0.0;
  std::optional<ExactLength> exact;
  Provenance provenance;
  std::string note;

  /// Exact symbolic form when available, otherwise empty.
  std::string symbolic() const { return exact ? exact->to_string() : std::string(); }
};

struct AccumulationPoint {
  double value = 0.0;
  double radius = 0.0;  // confidence radius of the estimate
};

/// A finite sorted set of positive reals plus detected accumulation points.
class Spectrum {
 public:
  Spectrum() = default;

  /// Inserts keeping ascending order; values equal (exactly, or within the
  /// numeric tolerance) to an existing entry are merged.
  void add(SpectrumValue v);
  void add_exact(const ExactLength& e, std::string note = {});
  void add_numeric(double value, double tol, std::string note = {});
  void add_undetermined(double value, std::string note = {});
  void add_accumulation(AccumulationPoint p);

  const std::vector<SpectrumValue>& values() const { return values_; }
  const std::vector<AccumulationPoint>& accumulation_points() const { return accumulation_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty() && accumulation_.empty(); }
  bool has_undetermined() const;

  std::vector<double> as_doubles() const;

  /// Completeness bound: every spectrum value <= complete_below is listed.
  std::optional<double> complete_below;
  std::vector<std::string> notes;

  Spectrum scaled(double factor) const;

 private:
  std::vector<SpectrumValue> values_;
  std::vector<AccumulationPoint> accumulation_;
};

/// Detects whether the smallest values of a sorted set crowd toward a limit
/// from above, and estimates that limit. Uses rank-indexed Richardson
/// extrapolation on the tail of the decreasing sequence; returns nothing when
/// the gaps do not shrink monotonically over at least `min_tail` terms.
std::optional<AccumulationPoint> detect_lower_accumulation(const std::vector<double>& ascending,
                                                           std::size_t min_tail = 5);

/// True when x lies in the lower semiclosure of `set`, i.e. x is a member
/// (within tol) or a limit of a nonincreasing sequence drawn from `set`.
/// For finite sets the second case only adds accumulation points.
bool in_lower_semiclosure(double x, const std::vector<double>& set,
                          const std::vector<AccumulationPoint>& accumulation, double tol);

/// Length attached to the power g^n of a generator of an infinite cyclic group.
struct PowerLength {
  long power = 1;
  double value = 0.0;
  std::optional<ExactLength> exact;
  bool undetermined = false;  // value too close to a threshold to resolve
};

/// Breakpoints of delta -> <g^n : L(g^n) < 2 delta>, a subgroup gcd*Z of Z.
/// Zero lengths belong to every level; a level that changes the gcd yields
/// the value L/2. Relative ties within `tie_tol` are merged.
Spectrum cyclic_filtration_spectrum(const std::vector<PowerLength>& lengths, double numeric_tol,
                                    double tie_tol = 1e-9);

}  // namespace covspec
