#pragma once

#include <string>
#include <vector>

#include "core/word.hpp"
#include "graph/metric_graph.hpp"

namespace covspec::graph {

struct Step {
  int edge = 0;
  int dir = 1;  // +1 traverses tail -> head
  bool operator==(const Step&) const = default;
  auto operator<=>(const Step&) const = default;
};
using EdgePath = std::vector<Step>;

/// Spanning tree (BFS from the basepoint, declaration order) plus chords.
/// Generator i is the i-th chord in edge order; its based loop runs along the
/// tree to the chord's tail, across the chord, and back.
class FreeBasis {
 public:
  explicit FreeBasis(MetricGraph g);

  const MetricGraph& graph() const { return g_; }
  int rank() const { return static_cast<int>(chords_.size()); }
  int chord_edge(int generator) const { return chords_.at(static_cast<std::size_t>(generator)); }
  const std::string& generator_name(int generator) const { return g_.edge(chord_edge(generator)).id; }
  /// Generator carried by an edge, or -1 for tree edges.
  int generator_of_edge(int edge) const { return edge_generator_.at(static_cast<std::size_t>(edge)); }
  /// Generator named by a chord edge id; throws GraphError when not a chord.
  int generator_named(const std::string& edge_id) const;

  EdgePath based_loop(int generator) const;
  /// Tree path from vertex `from` to vertex `to`.
  EdgePath tree_path(int from, int to) const;
  /// Concatenated based loops of the letters of w (unreduced).
  EdgePath expand(const Word& w) const;
  /// Word read off the chords a closed path crosses.
  Word word_of_path(const EdgePath& p) const;

  Length path_length(const EdgePath& p) const;

 private:
  EdgePath path_to_base(int v) const;

  MetricGraph g_;
  std::vector<int> parent_edge_;  // per vertex, -1 at the basepoint
  std::vector<int> chords_;
  std::vector<int> edge_generator_;
};

int step_target(const MetricGraph& g, const Step& s);
int step_source(const MetricGraph& g, const Step& s);
EdgePath reverse_path(const EdgePath& p);
/// Removes immediate backtracks (an edge followed by itself reversed).
EdgePath reduce_path(const EdgePath& p);
/// Reduces, then strips cancelling first/last steps of a closed path.
EdgePath cyclic_reduce_path(const EdgePath& p);

/// Translation length of the deck transform w on the universal-cover tree.
/// Throws GraphError on generator ids outside the basis.
Length translation_length(const FreeBasis& basis, const Word& w);
/// d(p~, w p~) in the universal-cover tree for the lift of vertex p that is
/// joined to the base lift by the tree path.
Length based_length(const FreeBasis& basis, const Word& w, int vertex);

}  // namespace covspec::graph
