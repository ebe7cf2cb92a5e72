#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/exact_length.hpp"

namespace covspec::graph {

struct Edge {
  std::string id;
  int tail = 0;  // vertex index
  int head = 0;
  Length length;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Error in the line-oriented graph text format; carries 1-based position.
class GraphParseError : public GraphError {
 public:
  GraphParseError(const std::string& msg, int line, int column)
      : GraphError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Finite weighted multigraph with a basepoint. Self-loops and parallel edges
/// are allowed. Vertices and edges keep the ids they were declared with.
class MetricGraph {
 public:
  int add_vertex(const std::string& id);
  int add_edge(const std::string& id, const std::string& v1, const std::string& v2, Length length);
  void set_basepoint(const std::string& id);

  /// Throws GraphError unless the graph is nonempty, connected and every edge
  /// has positive length.
  void validate() const;

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }
  const std::string& vertex_id(int v) const { return vertex_ids_.at(static_cast<std::size_t>(v)); }
  /// Index of the vertex with this id; throws GraphError when unknown.
  int vertex_index(const std::string& id) const;
  bool has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }
  int edge_index(const std::string& id) const;
  int basepoint() const { return basepoint_; }
  /// First Betti number E - V + 1 (rank of the free fundamental group).
  int rank() const { return edge_count() - vertex_count() + 1; }

  /// Round-trippable text in the `v` / `e` / `base` format.
  std::string to_text() const;

 private:
  std::vector<std::string> vertex_ids_;
  std::map<std::string, int> vertex_index_;
  std::vector<Edge> edges_;
  std::map<std::string, int> edge_index_;
  int basepoint_ = 0;
};

/// Parses `v <id>`, `e <id> <v1> <v2> <length-expression>`, `base <id>`.
/// Blank lines and `#` comments are ignored; `line_offset` shifts reported
/// line numbers when the block is embedded in a larger file.
MetricGraph parse_graph(const std::string& text, int line_offset = 0);
MetricGraph load_graph_file(const std::string& path);

// Presets. Lengths are exact where the arguments are.
MetricGraph circle_graph(const Length& circumference);
MetricGraph wedge_graph(const std::vector<Length>& circumferences);
/// Wedge of J circles of circumferences 2*pi*(1+1/j), j = 1..J.
MetricGraph harmonic_wedge(int J);
MetricGraph figure_eight(const Length& a, const Length& b);
/// Two loops joined by a bridge: loop a at vertex 0, bridge 0-1, loop b at 1.
MetricGraph barbell(const Length& loop_a, const Length& loop_b, const Length& bridge);
/// Connected graph on 1..4 vertices with at most `max_edges` edges (at least
/// one cycle) and lengths in {8, ..., 16}/8, reproducible from `seed`.
MetricGraph random_metric_graph(std::uint64_t seed, int max_edges = 6);

}  // namespace covspec::graph
