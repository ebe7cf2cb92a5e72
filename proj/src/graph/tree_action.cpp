#include "graph/tree_action.hpp"

#include <deque>

namespace covspec::graph {

int step_source(const MetricGraph& g, const Step& s) {
  const Edge& e = g.edge(s.edge);
  return s.dir > 0 ? e.tail : e.head;
}

int step_target(const MetricGraph& g, const Step& s) {
  const Edge& e = g.edge(s.edge);
  return s.dir > 0 ? e.head : e.tail;
}

EdgePath reverse_path(const EdgePath& p) {
  EdgePath out(p.rbegin(), p.rend());
  for (auto& s : out) s.dir = -s.dir;
  return out;
}

EdgePath reduce_path(const EdgePath& p) {
  EdgePath out;
  out.reserve(p.size());
  for (const auto& s : p) {
    if (!out.empty() && out.back().edge == s.edge && out.back().dir == -s.dir) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

EdgePath cyclic_reduce_path(const EdgePath& p) {
  EdgePath r = reduce_path(p);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo].edge == r[hi - 1].edge && r[lo].dir == -r[hi - 1].dir) {
    ++lo;
    --hi;
  }
  return EdgePath(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

FreeBasis::FreeBasis(MetricGraph g) : g_(std::move(g)) {
  g_.validate();
  const int n = g_.vertex_count();
  parent_edge_.assign(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<bool> tree(static_cast<std::size_t>(g_.edge_count()), false);
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (int i = 0; i < g_.edge_count(); ++i) {
    incident[static_cast<std::size_t>(g_.edge(i).tail)].push_back(i);
    if (g_.edge(i).head != g_.edge(i).tail) incident[static_cast<std::size_t>(g_.edge(i).head)].push_back(i);
  }
  std::deque<int> queue{g_.basepoint()};
  seen[static_cast<std::size_t>(g_.basepoint())] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int ei : incident[static_cast<std::size_t>(v)]) {
      const Edge& e = g_.edge(ei);
      int w = e.tail == v ? e.head : e.tail;
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      tree[static_cast<std::size_t>(ei)] = true;
      parent_edge_[static_cast<std::size_t>(w)] = ei;
      queue.push_back(w);
    }
  }
  edge_generator_.assign(static_cast<std::size_t>(g_.edge_count()), -1);
  for (int i = 0; i < g_.edge_count(); ++i) {
    if (tree[static_cast<std::size_t>(i)]) continue;
    edge_generator_[static_cast<std::size_t>(i)] = static_cast<int>(chords_.size());
    chords_.push_back(i);
  }
}

int FreeBasis::generator_named(const std::string& edge_id) const {
  int gen = generator_of_edge(g_.edge_index(edge_id));
  if (gen < 0) throw GraphError("edge '" + edge_id + "' is a spanning-tree edge, not a generator");
  return gen;
}

EdgePath FreeBasis::path_to_base(int v) const {
  EdgePath out;
  while (parent_edge_[static_cast<std::size_t>(v)] >= 0) {
    int ei = parent_edge_[static_cast<std::size_t>(v)];
    const Edge& e = g_.edge(ei);
    Step s{ei, e.head == v ? -1 : 1};
    out.push_back(s);
    v = step_target(g_, s);
  }
  return out;
}

EdgePath FreeBasis::tree_path(int from, int to) const {
  EdgePath a = path_to_base(from);
  EdgePath b = reverse_path(path_to_base(to));
  a.insert(a.end(), b.begin(), b.end());
  return reduce_path(a);
}

EdgePath FreeBasis::based_loop(int generator) const {
  if (generator < 0 || generator >= rank()) {
    throw GraphError("unknown generator " + std::to_string(generator) + " (rank " + std::to_string(rank()) + ")");
  }
  const Edge& e = g_.edge(chord_edge(generator));
  EdgePath out = tree_path(g_.basepoint(), e.tail);
  out.push_back({chord_edge(generator), 1});
  EdgePath back = tree_path(e.head, g_.basepoint());
  out.insert(out.end(), back.begin(), back.end());
  return out;
}

EdgePath FreeBasis::expand(const Word& w) const {
  EdgePath out;
  for (const auto& l : w.letters()) {
    EdgePath loop = based_loop(l.generator);
    if (l.sign < 0) loop = reverse_path(loop);
    out.insert(out.end(), loop.begin(), loop.end());
  }
  return out;
}

Word FreeBasis::word_of_path(const EdgePath& p) const {
  std::vector<Letter> letters;
  for (const auto& s : p) {
    int gen = generator_of_edge(s.edge);
    if (gen >= 0) letters.push_back({gen, s.dir});
  }
  return Word(std::move(letters));
}

Length FreeBasis::path_length(const EdgePath& p) const {
  Length total(ExactLength(0));
  for (const auto& s : p) total = total + g_.edge(s.edge).length;
  return total;
}

Length translation_length(const FreeBasis& basis, const Word& w) {
  return basis.path_length(cyclic_reduce_path(basis.expand(cyclic_reduce(w).core)));
}

Length based_length(const FreeBasis& basis, const Word& w, int vertex) {
  if (vertex < 0 || vertex >= basis.graph().vertex_count()) throw GraphError("unknown vertex index");
  int base = basis.graph().basepoint();
  EdgePath p = basis.tree_path(vertex, base);
  EdgePath loop = basis.expand(w);
  p.insert(p.end(), loop.begin(), loop.end());
  EdgePath back = basis.tree_path(base, vertex);
  p.insert(p.end(), back.begin(), back.end());
  return basis.path_length(reduce_path(p));
}

}  // namespace covspec::graph
