#include "tower/slipping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "core/spectrum.hpp"
#include "graph/covering.hpp"

namespace covspec::tower {

namespace {

int last_level(const GraphTower& t, int from, int budget) {
  int last = t.levels() - 1;
  if (budget >= 0) last = std::min(last, from + budget);
  return last;
}

bool shorter_than(const Length& l, double delta) {
  if (l.exact && l.exact->is_zero()) return true;
  return l.value < delta * (1 - 1e-12);
}

// Limit of a positive sequence sampled over levels. A sequence whose tail
// is constant has that limit; a convergent decreasing sequence is
// extrapolated; a sequence with no detectable positive limit is treated as
// tending to zero.
std::pair<double, bool> sequence_limit(const std::vector<double>& seq) {
  std::vector<double> finite;
  for (double x : seq) {
    if (std::isfinite(x)) finite.push_back(x);
  }
  if (finite.empty()) return {std::numeric_limits<double>::infinity(), true};
  double last = finite.back();
  if (finite.size() < 3) return {last, last > 0};
  std::size_t n = finite.size();
  auto same = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); };
  if (same(finite[n - 1], finite[n - 2]) && same(finite[n - 2], finite[n - 3])) return {last, last > 0};
  // Geometric decay (ratios bounded below 1) tends to zero.
  bool geometric = true;
  for (std::size_t k = n - 3; k + 1 < n; ++k) geometric = geometric && finite[k + 1] <= 0.75 * finite[k];
  if (geometric) return {0.0, false};
  std::set<double> distinct(finite.begin(), finite.end());
  std::vector<double> asc(distinct.begin(), distinct.end());
  if (auto acc = detect_lower_accumulation(asc)) {
    double lim = std::max(0.0, acc->value);
    return {lim, lim > 1e-2 * finite.front()};
  }
  // Geometric-type decay has no stable extrapolation; compare against the
  // start of the sequence.
  bool decaying = last < 0.5 * finite.front();
  return {decaying ? 0.0 : last, !decaying};
}

}  // namespace

TowerLengthReport tower_translation_length(const GraphTower& t, const TowerElement& g, int level_budget) {
  TowerLengthReport rep;
  int last = last_level(t, g.level, level_budget);
  Word w = reduce_word(g.word);
  for (int L = g.level; L <= last; ++L) {
    if (L > g.level) w = t.expand(L - 1, w, L);
    Length len = graph::translation_length(t.basis(L), w);
    if (!rep.per_level.empty() && compare_lengths(len, rep.per_level.back()) > 0) rep.nonincreasing = false;
    rep.per_level.push_back(len);
  }
  rep.last = rep.per_level.back();
  std::size_t n = rep.per_level.size();
  rep.stabilized = n >= 2 && compare_lengths(rep.per_level[n - 1], rep.per_level[n - 2]) == 0;
  return rep;
}

SlippingReport slipping_test(const GraphTower& t, const TowerElement& g, double eps, int level_budget) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  SlippingReport rep;
  rep.lengths = tower_translation_length(t, g, level_budget);
  for (std::size_t i = 0; i < rep.lengths.per_level.size(); ++i) {
    if (shorter_than(rep.lengths.per_level[i], eps)) {
      rep.verdict = Verdict::kYes;
      rep.witness_level = g.level + static_cast<int>(i);
      return rep;
    }
  }
  rep.verdict = Verdict::kNo;
  return rep;
}

GirthTrend girth_trend(const GraphTower& t) {
  GirthTrend tr;
  for (int L = 0; L < t.levels(); ++L) {
    const auto& b = t.basis(L);
    if (b.rank() == 0) {
      tr.girth.push_back(std::numeric_limits<double>::infinity());
      continue;
    }
    Length bound = graph::translation_length(b, Word::generator(0));
    for (int gi = 1; gi < b.rank(); ++gi) {
      Length l = graph::translation_length(b, Word::generator(gi));
      if (compare_lengths(l, bound) < 0) bound = l;
    }
    auto cyc = graph::enumerate_cycles(b, bound, true);
    tr.girth.push_back(cyc.cycles.empty() ? bound.value : cyc.cycles.front().length.value);
  }
  std::tie(tr.limit, tr.limit_positive) = sequence_limit(tr.girth);
  return tr;
}

UniversalSlippingReport universal_slipping_test(const GraphTower& t, const TowerElement& g, double delta,
                                                int level_budget, const GirthTrend* trend) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  UniversalSlippingReport rep;
  Word w = reduce_word(g.word);
  if (w.empty()) return {Verdict::kYes, "identity", g.level};
  GirthTrend local;
  if (!trend) {
    local = girth_trend(t);
    trend = &local;
  }
  if (trend->limit_positive && delta <= trend->limit * (1 - 1e-9)) {
    return {Verdict::kNo, "girth-bound", t.levels() - 1};
  }
  int last = last_level(t, g.level, level_budget);
  for (int L = g.level; L <= last; ++L) {
    if (L > g.level) w = t.expand(L - 1, w, L);
    bool all_short = true;
    std::map<int, bool> cache;
    for (const auto& l : w.letters()) {
      auto it = cache.find(l.generator);
      if (it == cache.end()) {
        it = cache.emplace(l.generator, shorter_than(graph::translation_length(t.basis(L), Word::generator(l.generator)),
                                                      delta)).first;
      }
      if (!it->second) {
        all_short = false;
        break;
      }
    }
    if (all_short) return {Verdict::kYes, "expansion", L};
  }
  double final_girth = trend->girth.empty() ? 0.0 : trend->girth[static_cast<std::size_t>(last)];
  if (delta <= final_girth * (1 + 1e-12)) {
    // No element shorter than delta exists at the deepest level.
    if (trend->limit_positive) return {Verdict::kNo, "girth-bound", last};
    return {Verdict::kUndetermined, "beyond-truncation", last};
  }
  bool truncated = false;
  auto closure = graph::delta_subgroup(t.basis(last), Length(delta / 2), 200'000, &truncated);
  auto m = closure.contains(w);
  if (m.verdict == Verdict::kYes) return {Verdict::kYes, "normal-closure:" + m.method, last};
  if (truncated) return {Verdict::kUndetermined, "cycle-budget", last};
  if (m.verdict == Verdict::kNo) {
    if (trend->limit_positive) return {Verdict::kNo, "normal-closure:" + m.method, last};
    return {Verdict::kUndetermined, "beyond-truncation", last};
  }
  return {Verdict::kUndetermined, "coset-budget", last};
}

std::vector<double> delta_schedule(double delta_max, int steps) {
  std::vector<double> out;
  for (int i = 0; i <= steps; ++i) out.push_back(std::ldexp(delta_max, -i));
  return out;
}

ScheduleVerdict universal_slipping_membership(const GraphTower& t, const TowerElement& g,
                                              const std::vector<double>& schedule, int level_budget) {
  ScheduleVerdict out;
  GirthTrend trend = girth_trend(t);
  bool any_yes = false;
  for (double d : schedule) {
    auto r = universal_slipping_test(t, g, d, level_budget, &trend);
    out.per_delta.push_back(r);
    if (r.verdict == Verdict::kYes) {
      any_yes = true;
      out.resolved_to = d;
      continue;
    }
    if (r.verdict == Verdict::kNo) {
      out.verdict = Verdict::kNo;
      return out;
    }
    out.verdict = (any_yes && r.method == "beyond-truncation") ? Verdict::kYes : Verdict::kUndetermined;
    return out;
  }
  out.verdict = Verdict::kYes;
  return out;
}

SlippingGroupReport slipping_group_membership(const GraphTower& t, const TowerElement& g, double eps) {
  SlippingGroupReport rep;
  rep.slipping_element = slipping_test(t, g, eps).verdict;
  Word w = reduce_word(g.word);
  if (w.empty()) {
    rep.generated_member = Verdict::kYes;
    return rep;
  }
  for (int L = g.level; L < t.levels(); ++L) {
    if (L > g.level) w = t.expand(L - 1, w, L);
    bool all = true;
    std::set<int> gens;
    for (const auto& l : w.letters()) gens.insert(l.generator);
    for (int gen : gens) {
      if (slipping_test(t, {L, Word::generator(gen)}, eps).verdict != Verdict::kYes) {
        all = false;
        break;
      }
    }
    if (all) {
      rep.generated_member = Verdict::kYes;
      return rep;
    }
  }
  rep.generated_member = rep.slipping_element == Verdict::kYes ? Verdict::kYes : Verdict::kNo;
  return rep;
}

UniversalDeltaCoverReport universal_delta_cover_report(const GraphTower& t, int schedule_steps) {
  UniversalDeltaCoverReport rep;
  std::vector<std::pair<int, int>> tracked;  // (level, generator)
  double longest = 0.0;
  for (int L = 0; L < t.levels(); ++L) {
    const auto& b = t.basis(L);
    for (int gi = 0; gi < b.rank(); ++gi) {
      const std::string& name = b.generator_name(gi);
      bool inherited = L > 0 && [&] {
        const auto& prev = t.basis(L - 1);
        for (int pj = 0; pj < prev.rank(); ++pj) {
          if (prev.generator_name(pj) == name && !t.has_rule(L - 1, name)) return true;
        }
        return false;
      }();
      if (inherited) continue;
      tracked.emplace_back(L, gi);
      longest = std::max(longest, graph::translation_length(b, Word::generator(gi)).value);
    }
  }
  rep.schedule = delta_schedule(std::max(2 * longest, 1e-300), schedule_steps);
  GirthTrend trend = girth_trend(t);
  bool all_yes = !tracked.empty(), all_no = true;
  for (const auto& [L, gi] : tracked) {
    GeneratorClass c;
    c.level = L;
    c.name = t.basis(L).generator_name(gi);
    ScheduleVerdict sv;
    bool any_yes = false;
    for (double d : rep.schedule) {
      auto r = universal_slipping_test(t, {L, Word::generator(gi)}, d, -1, &trend);
      sv.per_delta.push_back(r);
      if (r.verdict == Verdict::kYes) {
        any_yes = true;
        sv.resolved_to = d;
        continue;
      }
      sv.verdict = r.verdict == Verdict::kNo
                       ? Verdict::kNo
                       : ((any_yes && r.method == "beyond-truncation") ? Verdict::kYes : Verdict::kUndetermined);
      break;
    }
    if (sv.per_delta.size() == rep.schedule.size() && sv.per_delta.back().verdict == Verdict::kYes) {
      sv.verdict = Verdict::kYes;
    }
    c.membership = sv;
    if (sv.verdict != Verdict::kYes) all_yes = false;
    if (sv.verdict != Verdict::kNo) all_no = false;
    if (sv.verdict == Verdict::kUndetermined) rep.undetermined.push_back(c.name);
    rep.generators.push_back(std::move(c));
  }
  rep.pi_slip_full = all_yes;
  rep.pi_slip_trivial = all_no;
  if (rep.pi_slip_full) {
    rep.quotient_identity = "X~^0 = X~/pi_slip = X~/pi_1(X) = X";
  } else if (rep.pi_slip_trivial) {
    rep.quotient_identity = "X~^0 = X~/pi_slip = X~ (universal cover)";
  } else {
    rep.quotient_identity = "X~^0 = X~/pi_slip";
  }
  for (int L = 0; L < t.levels(); ++L) {
    auto s = graph::covering_spectrum_report(t.graph(L)).spectrum;
    rep.covspec_inf_per_level.push_back(s.size() ? s.values().front().value : std::numeric_limits<double>::infinity());
  }
  std::tie(rep.covspec_inf_limit, rep.inf_positive) = sequence_limit(rep.covspec_inf_per_level);
  rep.covspec_inf = rep.covspec_inf_per_level.empty() ? 0.0 : rep.covspec_inf_per_level.back();
  if (rep.inf_positive && std::isfinite(rep.covspec_inf)) {
    rep.is_delta_cover = true;
    rep.delta0 = rep.covspec_inf / 2;
  }
  return rep;
}

}  // namespace covspec::tower
