#include "graph/metric_graph.hpp"

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "model/expr.hpp"

namespace covspec::graph {

int MetricGraph::add_vertex(const std::string& id) {
  auto it = vertex_index_.find(id);
  if (it != vertex_index_.end()) return it->second;
  int idx = vertex_count();
  vertex_ids_.push_back(id);
  vertex_index_[id] = idx;
  return idx;
}

int MetricGraph::add_edge(const std::string& id, const std::string& v1, const std::string& v2, Length length) {
  if (edge_index_.count(id)) throw GraphError("duplicate edge id '" + id + "'");
  Edge e{id, vertex_index(v1), vertex_index(v2), std::move(length)};
  int idx = edge_count();
  edges_.push_back(std::move(e));
  edge_index_[id] = idx;
  return idx;
}

void MetricGraph::set_basepoint(const std::string& id) { basepoint_ = vertex_index(id); }

int MetricGraph::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw GraphError("unknown vertex '" + id + "'");
  return it->second;
}

int MetricGraph::edge_index(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw GraphError("unknown edge '" + id + "'");
  return it->second;
}

void MetricGraph::validate() const {
  if (vertex_ids_.empty()) throw GraphError("graph has no vertices");
  for (const auto& e : edges_) {
    bool positive = e.length.exact ? e.length.exact->sign() > 0 : e.length.value > 0;
    if (!positive) throw GraphError("edge '" + e.id + "' has non-positive length");
  }
  std::vector<int> parent(vertex_ids_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int components = vertex_count();
  for (const auto& e : edges_) {
    int a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  if (components != 1) throw GraphError("graph is not connected");
}

std::string MetricGraph::to_text() const {
  std::ostringstream out;
  for (const auto& v : vertex_ids_) out << "v " << v << "\n";
  for (const auto& e : edges_) {
    out << "e " << e.id << " " << vertex_id(e.tail) << " " << vertex_id(e.head) << " ";
    if (e.length.exact) {
      out << e.length.exact->to_string();
    } else {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", e.length.value);
      out << buf;
    }
    out << "\n";
  }
  out << "base " << vertex_id(basepoint_) << "\n";
  return out.str();
}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line, std::size_t max_tokens, std::string* rest, int* rest_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    if (out.size() == max_tokens) {
      if (rest) *rest = line.substr(i);
      if (rest_column) *rest_column = static_cast<int>(i) + 1;
      break;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

}  // namespace

MetricGraph parse_graph(const std::string& text, int line_offset) {
  MetricGraph g;
  std::istringstream in(text);
  std::string line;
  int lineno = line_offset;
  bool have_base = false;
  std::string base_id;
  int base_line = 0, base_col = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string rest;
    int rest_col = 0;
    auto toks = tokenize(line, 4, &rest, &rest_col);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    try {
      if (kw == "v") {
        if (toks.size() != 2 || !rest.empty()) throw GraphParseError("expected 'v <id>'", lineno, toks[0].column);
        g.add_vertex(toks[1].text);
      } else if (kw == "e") {
        if (toks.size() < 4 || rest.empty()) {
          throw GraphParseError("expected 'e <id> <v1> <v2> <length>'", lineno, toks[0].column);
        }
        for (int k : {2, 3}) {
          if (!g.has_vertex(toks[static_cast<std::size_t>(k)].text)) {
            throw GraphParseError("unknown vertex '" + toks[static_cast<std::size_t>(k)].text + "'", lineno,
                                  toks[static_cast<std::size_t>(k)].column);
          }
        }
        Length len;
        try {
          len = model::parse_length(rest);
        } catch (const model::ParseError& pe) {
          std::string msg = pe.what();
          msg = msg.substr(0, msg.rfind(" at column "));
          throw GraphParseError("bad length expression: " + msg, lineno,
                                rest_col + static_cast<int>(pe.column()) - 1);
        }
        bool positive = len.exact ? len.exact->sign() > 0 : len.value > 0;
        if (!positive) throw GraphParseError("edge length must be positive", lineno, rest_col);
        try {
          g.add_edge(toks[1].text, toks[2].text, toks[3].text, len);
        } catch (const GraphError& ge) {
          throw GraphParseError(ge.what(), lineno, toks[1].column);
        }
      } else if (kw == "base") {
        if (toks.size() != 2 || !rest.empty()) throw GraphParseError("expected 'base <id>'", lineno, toks[0].column);
        have_base = true;
        base_id = toks[1].text;
        base_line = lineno;
        base_col = toks[1].column;
      } else {
        throw GraphParseError("unknown directive '" + kw + "'", lineno, toks[0].column);
      }
    } catch (const std::domain_error& de) {
      throw GraphParseError(de.what(), lineno, toks[0].column);
    }
  }
  if (g.vertex_count() == 0) throw GraphParseError("no vertices declared", lineno + 1, 1);
  if (have_base) {
    if (!g.has_vertex(base_id)) throw GraphParseError("unknown vertex '" + base_id + "'", base_line, base_col);
    g.set_basepoint(base_id);
  }
  g.validate();
  return g;
}

MetricGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

MetricGraph circle_graph(const Length& circumference) { return wedge_graph({circumference}); }

MetricGraph wedge_graph(const std::vector<Length>& circumferences) {
  MetricGraph g;
  g.add_vertex("o");
  for (std::size_t j = 0; j < circumferences.size(); ++j) {
    g.add_edge("c" + std::to_string(j + 1), "o", "o", circumferences[j]);
  }
  g.set_basepoint("o");
  return g;
}

MetricGraph harmonic_wedge(int J) {
  std::vector<Length> lengths;
  for (int j = 1; j <= J; ++j) lengths.emplace_back(ExactLength(0, Rational(2) * (Rational(1) + Rational(1, j))));
  return wedge_graph(lengths);
}

MetricGraph figure_eight(const Length& a, const Length& b) { return wedge_graph({a, b}); }

MetricGraph barbell(const Length& loop_a, const Length& loop_b, const Length& bridge) {
  MetricGraph g;
  g.add_vertex("0");
  g.add_vertex("1");
  g.add_edge("a", "0", "0", loop_a);
  g.add_edge("bridge", "0", "1", bridge);
  g.add_edge("b", "1", "1", loop_b);
  g.set_basepoint("0");
  return g;
}

MetricGraph random_metric_graph(std::uint64_t seed, int max_edges) {
  if (max_edges < 1) throw std::invalid_argument("max_edges must be positive");
  std::mt19937_64 rng(seed);
  int n = std::uniform_int_distribution<int>(1, std::min(4, max_edges))(rng);
  int extra = std::uniform_int_distribution<int>(1, std::max(1, max_edges - (n - 1)))(rng);
  std::uniform_int_distribution<int> eighths(8, 16);
  auto len = [&] { return Length(ExactLength(Rational(eighths(rng), 8))); };
  MetricGraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(std::to_string(v));
  int eid = 0;
  for (int v = 1; v < n; ++v) {
    int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    g.add_edge("e" + std::to_string(eid++), std::to_string(parent), std::to_string(v), len());
  }
  std::uniform_int_distribution<int> any(0, n - 1);
  for (int k = 0; k < extra; ++k) {
    int a = any(rng), b = any(rng);
    g.add_edge("e" + std::to_string(eid++), std::to_string(a), std::to_string(b), len());
  }
  g.set_basepoint("0");
  return g;
}

}  // namespace covspec::graph
