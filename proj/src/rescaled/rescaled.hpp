#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/spectrum.hpp"
#include "rescaled/models.hpp"

namespace covspec::rescaled {

enum class Variant { kBasepoint, kInfinity };

struct RescaledOptions {
  std::vector<double> schedule{10, 31.6, 100, 316, 1000, 3162, 10000};  // radii R
  int refine_iterations = 60;
  double zero_threshold = 1e-4;  // numeric slipping verdicts
  double boundary_tol = 1e-6;    // |L - 2 delta| below this is a boundary case
  long max_power = 6;            // powers g^1..g^max_power are tracked
  bool cross_check = false;      // also sample when a closed form exists
};

struct RescaledLengthReport {
  double value = 0.0;
  std::optional<ExactLength> exact;
  std::vector<std::pair<double, double>> witness;  // (parameter, ratio)
  bool attained = false;
  std::string convergence;  // "exact", "converged", "slow", "not-converged"
  std::string method;
  std::optional<double> numeric;  // sampled estimate, kept as a cross-check
};

/// L^{x0}_rs(g^n): infimum of d(g^n x~, x~) / d(x, x0) over the model.
RescaledLengthReport rescaled_length_basepoint(const SpaceModel& s, long n, const RescaledOptions& opts = {});
/// L^inf_rs(g^n): limit over R of the same infimum outside the R-ball.
RescaledLengthReport rescaled_length_infinity(const SpaceModel& s, long n, const RescaledOptions& opts = {});
RescaledLengthReport rescaled_length(const SpaceModel& s, long n, Variant which, const RescaledOptions& opts = {});

/// Subgroup of Z = <g> generated by powers with rescaled length < 2 delta.
struct DeltaGroup {
  long generator = 0;  // the group is generator*Z; 0 means trivial
  std::vector<long> members;
  std::vector<long> boundary;  // powers with length within tolerance of 2 delta
  bool whole_group() const { return generator == 1; }
  std::string describe() const;
};

DeltaGroup rescaled_delta_group(const SpaceModel& s, double delta, Variant which, const RescaledOptions& opts = {});
Spectrum rescaled_covspec(const SpaceModel& s, Variant which, const RescaledOptions& opts = {});

enum class Verdict { kYes, kNo, kUndetermined };
std::string to_string(Verdict v);

struct SlippingVerdict {
  Verdict verdict = Verdict::kUndetermined;
  std::string reason;
};

SlippingVerdict rescaled_slipping_membership(const SpaceModel& s, long n, const RescaledOptions& opts = {});

struct LoopsToInfinity {
  bool loops_to_infinity = false;
  bool cut_spectrum_empty = false;  // derived from CovSpec^inf_rs inside (0, 1)
  std::string note;
};

LoopsToInfinity loops_to_infinity_flag(const SpaceModel& s, long n, const RescaledOptions& opts = {});

}  // namespace covspec::rescaled
