#include "graph/covering.hpp"

#include <deque>
#include <limits>
#include <map>

namespace covspec::graph {

namespace {

Length half(const Length& l) {
  if (l.exact) return Length(*l.exact / Rational(2));
  return Length(l.value / 2);
}

Length twice(const Length& l) { return l * 2; }

Length default_lmax(const FreeBasis& basis) {
  Length best(ExactLength(0));
  for (int gi = 0; gi < basis.rank(); ++gi) {
    Length l = translation_length(basis, Word::generator(gi));
    if (compare_lengths(l, best) > 0) best = l;
  }
  return best;
}

}  // namespace

GraphSpectrumReport covering_spectrum_report(const MetricGraph& g, const GraphSpectrumOptions& opts) {
  FreeBasis basis(g);
  GraphSpectrumReport rep;
  rep.Lmax = opts.Lmax ? *opts.Lmax : default_lmax(basis);
  if (basis.rank() == 0) {
    rep.reached_whole_group = true;
    rep.spectrum.complete_below = std::numeric_limits<double>::infinity();
    return rep;
  }
  CycleEnumeration cyc = enumerate_cycles(basis, rep.Lmax, true, opts.walk_budget);
  rep.cycles = cyc.cycles.size();
  rep.truncated = cyc.truncated;

  std::vector<Word> shorter;
  std::size_t i = 0;
  while (i < cyc.cycles.size()) {
    std::size_t j = i;
    while (j < cyc.cycles.size() && compare_lengths(cyc.cycles[j].length, cyc.cycles[i].length) == 0) ++j;
    NormalClosure closure(basis.rank(), shorter, opts.coset_budget);
    bool whole = true;
    for (int gi = 0; gi < basis.rank() && whole; ++gi) {
      whole = closure.contains(Word::generator(gi)).verdict == Verdict::kYes;
    }
    if (whole) {
      rep.reached_whole_group = true;
      break;
    }
    bool breakpoint = false, unknown = false;
    std::string method;
    for (std::size_t k = i; k < j && !breakpoint; ++k) {
      Membership m = closure.contains(cyc.cycles[k].word);
      if (m.verdict == Verdict::kNo) {
        breakpoint = true;
        method = m.method;
      } else if (m.verdict == Verdict::kUndetermined) {
        unknown = true;
      }
    }
    Length delta = half(cyc.cycles[i].length);
    if (breakpoint) {
      if (delta.exact) {
        rep.spectrum.add_exact(*delta.exact, method);
      } else {
        rep.spectrum.add_numeric(delta.value, 1e-9 * std::max(1.0, delta.value), method);
      }
    } else if (unknown) {
      rep.spectrum.add_undetermined(delta.value, "coset enumeration budget exhausted");
    }
    for (std::size_t k = i; k < j; ++k) shorter.push_back(cyc.cycles[k].word);
    i = j;
  }
  if (!rep.reached_whole_group && i >= cyc.cycles.size()) {
    // Check whether the last batch completed the group.
    NormalClosure closure(basis.rank(), shorter, opts.coset_budget);
    bool whole = true;
    for (int gi = 0; gi < basis.rank() && whole; ++gi) {
      whole = closure.contains(Word::generator(gi)).verdict == Verdict::kYes;
    }
    rep.reached_whole_group = whole;
  }
  if (rep.truncated) {
    rep.spectrum.complete_below = 0.0;
    rep.spectrum.notes.push_back("cycle enumeration truncated at walk budget; spectrum may be incomplete");
  } else if (rep.reached_whole_group) {
    rep.spectrum.complete_below = std::numeric_limits<double>::infinity();
  } else {
    rep.spectrum.complete_below = rep.Lmax.value / 2;
    rep.spectrum.notes.push_back("values above Lmax/2 = " + std::to_string(rep.Lmax.value / 2) + " not computed");
  }
  if (opts.detect_accumulation) {
    if (auto acc = detect_lower_accumulation(rep.spectrum.as_doubles())) rep.spectrum.add_accumulation(*acc);
  }
  return rep;
}

Spectrum covering_spectrum_graph(const MetricGraph& g, std::optional<Length> Lmax) {
  GraphSpectrumOptions opts;
  opts.Lmax = std::move(Lmax);
  return covering_spectrum_report(g, opts).spectrum;
}

NormalClosure delta_subgroup(const FreeBasis& basis, const Length& delta, std::size_t coset_budget,
                             bool* truncated) {
  std::vector<Word> rels;
  if (truncated) *truncated = false;
  if (basis.rank() > 0) {
    auto cyc = enumerate_cycles(basis, twice(delta), false);
    if (truncated) *truncated = cyc.truncated;
    for (const auto& c : cyc.cycles) rels.push_back(c.word);
  }
  return NormalClosure(basis.rank(), std::move(rels), coset_budget);
}

DeltaCover delta_cover_graph(const MetricGraph& g, const Length& delta, std::size_t coset_budget, int ball_vertices) {
  bool positive = delta.exact ? delta.exact->sign() > 0 : delta.value > 0;
  if (!positive) throw std::invalid_argument("delta must be positive");
  FreeBasis basis(g);
  bool truncated = false;
  NormalClosure n = delta_subgroup(basis, delta, coset_budget, &truncated);
  DeltaCover out;
  out.unresolved_identifications = truncated;
  const bool free_quotient = n.quotient_is_free();
  std::optional<CosetTable> table;
  if (!free_quotient || n.surviving_generators() == 0) table = n.finite_quotient();
  if (free_quotient && n.surviving_generators() == 0) table = CosetTable{1, {std::vector<int>()}};

  if (table) {
    out.sheets = table->order;
    for (int c = 0; c < table->order; ++c) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        out.cover.add_vertex(g.vertex_id(v) + "@" + std::to_string(c));
        out.projection.push_back(v);
      }
    }
    for (int c = 0; c < table->order; ++c) {
      for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        int gen = basis.generator_of_edge(e);
        int target = gen < 0 ? c : NormalClosure::act(*table, c, n.rewrite(Word::generator(gen)));
        out.cover.add_edge(ed.id + "@" + std::to_string(c), g.vertex_id(ed.tail) + "@" + std::to_string(c),
                           g.vertex_id(ed.head) + "@" + std::to_string(target), ed.length);
      }
    }
    out.cover.set_basepoint(g.vertex_id(g.basepoint()) + "@0");
    return out;
  }

  // Ball of the (infinite or unresolved) cover around the base lift.
  out.partial = true;
  struct Node {
    int vertex;
    Word word;  // deck element over the original generators, reduced
    int depth;
  };
  std::vector<Node> nodes;
  std::map<std::pair<int, Word>, int> index;  // exact keys in the free case
  auto find_node = [&](int v, const Word& w) -> int {
    if (free_quotient) {
      auto it = index.find({v, n.rewrite(w)});
      return it == index.end() ? -1 : it->second;
    }
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k].vertex != v) continue;
      Membership m = n.contains(nodes[k].word.inverse() * w);
      if (m.verdict == Verdict::kYes) return static_cast<int>(k);
      if (m.verdict == Verdict::kUndetermined) out.unresolved_identifications = true;
    }
    return -1;
  };
  auto add_node = [&](int v, const Word& w, int depth) {
    nodes.push_back({v, w, depth});
    if (free_quotient) index[{v, n.rewrite(w)}] = static_cast<int>(nodes.size()) - 1;
    out.cover.add_vertex(g.vertex_id(v) + "@" + std::to_string(nodes.size() - 1));
    out.projection.push_back(v);
    out.radius = std::max(out.radius, depth);
  };
  add_node(g.basepoint(), Word(), 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      int gen = basis.generator_of_edge(e);
      for (int dir : {1, -1}) {
        int from = dir > 0 ? ed.tail : ed.head;
        if (from != nodes[static_cast<std::size_t>(cur)].vertex) continue;
        int to = dir > 0 ? ed.head : ed.tail;
        Word w = nodes[static_cast<std::size_t>(cur)].word;
        if (gen >= 0) w = reduce_word(w * Word::generator(gen, dir));
        int k = find_node(to, w);
        if (k < 0) {
          if (static_cast<int>(nodes.size()) >= ball_vertices) continue;
          add_node(to, w, nodes[static_cast<std::size_t>(cur)].depth + 1);
          k = static_cast<int>(nodes.size()) - 1;
          queue.push_back(k);
        }
        if (dir > 0) {
          // Each cover edge is recorded once, from its tail lift.
          out.cover.add_edge(ed.id + "@" + std::to_string(cur), out.cover.vertex_id(cur), out.cover.vertex_id(k),
                             ed.length);
        }
      }
    }
  }
  out.cover.set_basepoint(out.cover.vertex_id(0));
  return out;
}

CovOfShiftReport covofshift_check(const MetricGraph& g, std::optional<Length> Lmax) {
  FreeBasis basis(g);
  GraphSpectrumOptions opts;
  opts.Lmax = Lmax ? *Lmax : default_lmax(basis);
  CovOfShiftReport rep;
  rep.covering = covering_spectrum_report(g, opts).spectrum;
  if (basis.rank() > 0) {
    for (const auto& c : enumerate_cycles(basis, *opts.Lmax, true).cycles) {
      Length h = half(c.length);
      if (rep.half_shift.empty() || compare_lengths(rep.half_shift.back(), h) != 0) rep.half_shift.push_back(h);
    }
  }
  std::vector<double> halves;
  for (const auto& h : rep.half_shift) halves.push_back(h.value);
  std::vector<AccumulationPoint> acc;
  if (auto a = detect_lower_accumulation(halves)) acc.push_back(*a);
  for (const auto& v : rep.covering.values()) {
    bool ok = false;
    if (v.exact) {
      for (const auto& h : rep.half_shift) ok = ok || (h.exact && *h.exact == *v.exact);
    }
    ok = ok || in_lower_semiclosure(v.value, halves, acc, 1e-9 * std::max(1.0, v.value));
    if (!ok) rep.violations.push_back(v.value);
  }
  for (const auto& a : rep.covering.accumulation_points()) {
    if (!in_lower_semiclosure(a.value, halves, acc, std::max(a.radius, 1e-9))) rep.violations.push_back(a.value);
  }
  rep.pass = rep.violations.empty();
  return rep;
}

}  // namespace covspec::graph
