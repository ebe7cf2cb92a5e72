#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "graph/tree_action.hpp"

namespace covspec::tower {

/// One signed generator named by its chord edge id.
using NamedLetter = std::pair<std::string, int>;

/// A nested sequence of metric graphs modelling a noncompact space. Level n
/// maps into level n+1 by a basepoint-preserving injective vertex map, and
/// level-n generators are carried to level n+1 either by an explicit
/// expansion rule or, absent a rule, to the generator of the same name.
class GraphTower {
 public:
  int add_level(graph::MetricGraph g);
  /// Vertex map from `level` to `level + 1`. Missing vertices map to the
  /// vertex with the same id.
  void set_embedding(int level, std::map<std::string, std::string> vertex_map);
  void add_rule(int level, const std::string& generator, std::vector<NamedLetter> image);

  /// Throws graph::GraphError when an embedding is not injective, moves the
  /// basepoint, or names a missing vertex, or when a rule refers to a
  /// non-generator.
  void validate() const;

  int levels() const { return static_cast<int>(levels_.size()); }
  const graph::FreeBasis& basis(int level) const { return *levels_.at(static_cast<std::size_t>(level)).basis; }
  const graph::MetricGraph& graph(int level) const { return basis(level).graph(); }
  bool has_rule(int level, const std::string& generator) const;
  const std::map<std::string, std::string>& embedding(int level) const {
    return levels_.at(static_cast<std::size_t>(level)).embed;
  }

  /// Rewrites a reduced word at `level` into generators of `target` >= level.
  Word expand(int level, const Word& w, int target) const;
  /// Parses "g_{1,1} g_{1,2}^-1" style words over level generator names.
  Word parse_element(int level, const std::string& text) const;
  std::string element_to_string(int level, const Word& w) const;

 private:
  struct Level {
    std::shared_ptr<graph::FreeBasis> basis;
    std::map<std::string, std::string> embed;
    std::map<std::string, std::vector<NamedLetter>> rules;
  };
  std::vector<Level> levels_;
};

/// Tower file: `tower` header, then `level` blocks in the graph text format,
/// with `embed <v> <w>` and `expand <gen> = <word>` lines referring to the
/// next level.
GraphTower parse_tower(const std::string& text);
GraphTower load_tower_file(const std::string& path);

// Presets.
/// Level i (i = 0..levels-1) is a wedge of 2^i circles g_{i,j} of
/// circumference 2*pi/2^i, with g_{i,j} = g_{i+1,2j-1} g_{i+1,2j}.
GraphTower pants_tower(int levels);
/// Level j (j = 1..J) adds circle c_j of circumference 2*pi*(1+1/j).
GraphTower harmonic_wedge_tower(int J);
/// Level j adds circle c_j of circumference 2*pi/j (dual graph of a surface
/// of infinite genus with shrinking handles).
GraphTower shrinking_wedge_tower(int J);
/// Level n is a single loop g of length 1/n.
GraphTower shrinking_loop_tower(int levels);
/// Level n: loops a, b of length 1/n joined by a bridge of length 1.
GraphTower slipping_barbell_tower(int levels);
/// The same graph at every level.
GraphTower constant_tower(const graph::MetricGraph& g, int levels);

}  // namespace covspec::tower
