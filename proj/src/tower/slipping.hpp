#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph/normal_closure.hpp"
#include "tower/graph_tower.hpp"

namespace covspec::tower {

using graph::Verdict;

struct TowerElement {
  int level = 0;
  Word word;
};

struct TowerLengthReport {
  std::vector<Length> per_level;  // levels g.level .. g.level + budget
  Length last;
  bool stabilized = false;        // last two levels agree
  bool nonincreasing = true;
};

/// Translation length of g at each level from its own level on.
TowerLengthReport tower_translation_length(const GraphTower& t, const TowerElement& g, int level_budget = -1);

struct SlippingReport {
  Verdict verdict = Verdict::kUndetermined;  // kYes: slipping; kNo: not slipping below budget
  int witness_level = -1;
  TowerLengthReport lengths;
};

/// Slipping iff some level within budget gives translation length < eps.
SlippingReport slipping_test(const GraphTower& t, const TowerElement& g, double eps, int level_budget = -1);

/// Limit of the girth (shortest cycle length) over levels.
struct GirthTrend {
  std::vector<double> girth;  // per level
  double limit = 0.0;
  bool limit_positive = false;
};
GirthTrend girth_trend(const GraphTower& t);

struct UniversalSlippingReport {
  Verdict verdict = Verdict::kUndetermined;
  std::string method;  // "expansion", "normal-closure", "girth-bound", ...
  int level = -1;      // level at which the verdict was reached
};

/// Tests g = g_1 ... g_N with every L(g_k) < delta, by expansion within the
/// level budget, then by normal-closure membership of the cycles shorter
/// than delta at the deepest level; "no" when no element shorter than delta
/// exists at any level or membership is certified false.
UniversalSlippingReport universal_slipping_test(const GraphTower& t, const TowerElement& g, double delta,
                                                int level_budget = -1, const GirthTrend* trend = nullptr);

/// Geometric schedule delta_max * 2^-i, i = 0..steps.
std::vector<double> delta_schedule(double delta_max, int steps);

struct ScheduleVerdict {
  Verdict verdict = Verdict::kUndetermined;
  double resolved_to = 0.0;  // smallest delta with a "yes"
  std::vector<UniversalSlippingReport> per_delta;
};

/// Universal-slipping membership across a decreasing delta schedule. A
/// member answers yes at every delta; the first "no" ends the run.
/// Undetermined steps after at least one "yes" at a delta the truncation can
/// resolve keep the element a member, down to `resolved_to`.
ScheduleVerdict universal_slipping_membership(const GraphTower& t, const TowerElement& g,
                                              const std::vector<double>& schedule, int level_budget = -1);

struct SlippingGroupReport {
  Verdict slipping_element = Verdict::kUndetermined;   // g itself slips
  Verdict generated_member = Verdict::kUndetermined;   // g is a product of slipping generators
};

/// Membership of g in the group generated by slipping elements, tested via
/// the slipping verdicts of the generators appearing in g's expansions.
SlippingGroupReport slipping_group_membership(const GraphTower& t, const TowerElement& g, double eps);

struct GeneratorClass {
  int level = 0;
  std::string name;
  ScheduleVerdict membership;
};

struct UniversalDeltaCoverReport {
  std::vector<GeneratorClass> generators;
  std::vector<std::string> undetermined;
  bool pi_slip_full = false;
  bool pi_slip_trivial = false;
  std::string quotient_identity;
  std::vector<double> covspec_inf_per_level;
  double covspec_inf = 0.0;        // infimum at the deepest level
  double covspec_inf_limit = 0.0;  // extrapolated limit over levels
  bool inf_positive = false;
  bool is_delta_cover = false;
  double delta0 = 0.0;
  std::vector<double> schedule;
};

UniversalDeltaCoverReport universal_delta_cover_report(const GraphTower& t, int schedule_steps = 20);

}  // namespace covspec::tower
