#include "graph/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>

#include "core/parallel.hpp"

namespace covspec::graph {

namespace {

Step step_of(int code) { return {code / 2, (code & 1) ? -1 : 1}; }
int inverse_code(int code) { return code ^ 1; }

std::vector<int> least_rotation(const std::vector<int>& s) {
  std::vector<int> best = s;
  std::vector<int> cur = s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<int> canonical(const std::vector<int>& codes) {
  std::vector<int> rev;
  rev.reserve(codes.size());
  for (auto it = codes.rbegin(); it != codes.rend(); ++it) rev.push_back(inverse_code(*it));
  return std::min(least_rotation(codes), least_rotation(rev));
}

}  // namespace

CycleEnumeration enumerate_cycles(const FreeBasis& basis, const Length& bound, bool inclusive,
                                  std::size_t walk_budget) {
  const MetricGraph& g = basis.graph();
  const int ncodes = 2 * g.edge_count();
  std::vector<std::vector<int>> out_codes(static_cast<std::size_t>(g.vertex_count()));
  std::vector<double> code_len(static_cast<std::size_t>(ncodes));
  for (int c = 0; c < ncodes; ++c) {
    Step s = step_of(c);
    out_codes[static_cast<std::size_t>(step_source(g, s))].push_back(c);
    code_len[static_cast<std::size_t>(c)] = g.edge(s.edge).length.value;
  }
  const double slack = bound.value * (1 + 1e-9) + 1e-12;
  const std::size_t per_start = ncodes > 0 ? std::max<std::size_t>(1, walk_budget / static_cast<std::size_t>(ncodes)) : 0;

  struct Partial {
    std::set<std::vector<int>> found;
    bool truncated = false;
    std::size_t walks = 0;
  };

  auto explore = [&](std::size_t start_index) {
    Partial part;
    const int start = static_cast<int>(start_index);
    const int origin = step_source(g, step_of(start));
    std::vector<int> path{start};
    std::vector<std::size_t> cursor{0};
    std::vector<double> len{code_len[static_cast<std::size_t>(start)]};
    // Iterative DFS; every code on the walk is >= start, so each cycle is
    // found from its smallest directed edge.
    while (!path.empty()) {
      if (++part.walks > per_start) {
        part.truncated = true;
        break;
      }
      int last = path.back();
      int here = step_target(g, step_of(last));
      if (cursor.back() == 0 && here == origin && inverse_code(last) != start) {
        part.found.insert(canonical(path));
      }
      const auto& outs = out_codes[static_cast<std::size_t>(here)];
      bool pushed = false;
      while (cursor.back() < outs.size()) {
        int next = outs[cursor.back()++];
        if (next < start || next == inverse_code(last)) continue;
        double nl = len.back() + code_len[static_cast<std::size_t>(next)];
        // A walk that cannot close within the bound is abandoned.
        if (nl > slack) continue;
        path.push_back(next);
        len.push_back(nl);
        cursor.push_back(0);
        pushed = true;
        break;
      }
      if (!pushed) {
        path.pop_back();
        len.pop_back();
        cursor.pop_back();
      }
    }
    return part;
  };

  auto parts = parallel_map<Partial>(static_cast<std::size_t>(ncodes), explore);
  std::set<std::vector<int>> all;
  CycleEnumeration result;
  for (auto& p : parts) {
    all.insert(p.found.begin(), p.found.end());
    result.truncated = result.truncated || p.truncated;
    result.walks += p.walks;
  }
  for (const auto& codes : all) {
    Cycle c;
    for (int code : codes) c.path.push_back(step_of(code));
    c.length = basis.path_length(c.path);
    int cmp = compare_lengths(c.length, bound);
    if (cmp > 0 || (cmp == 0 && !inclusive)) continue;
    c.word = basis.word_of_path(c.path);
    result.cycles.push_back(std::move(c));
  }
  std::stable_sort(result.cycles.begin(), result.cycles.end(), [](const Cycle& a, const Cycle& b) {
    return compare_lengths(a.length, b.length) < 0;
  });
  return result;
}

ShiftSpectrum shift_spectrum(const MetricGraph& g, const Length& Lmax, std::size_t walk_budget) {
  bool positive = Lmax.exact ? Lmax.exact->sign() > 0 : Lmax.value > 0;
  if (!positive) throw std::invalid_argument("Lmax must be positive");
  FreeBasis basis(g);
  CycleEnumeration cycles = enumerate_cycles(basis, Lmax, false, walk_budget);
  ShiftSpectrum out;
  out.bound = Lmax;
  out.truncated = cycles.truncated;
  for (const auto& c : cycles.cycles) {
    if (!out.values.empty() && compare_lengths(out.values.back().length, c.length) == 0) {
      ++out.values.back().multiplicity;
    } else {
      out.values.push_back({c.length, 1});
    }
  }
  return out;
}

}  // namespace covspec::graph
