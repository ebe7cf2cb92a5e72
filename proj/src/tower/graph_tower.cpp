#include "tower/graph_tower.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace covspec::tower {

using graph::GraphError;
using graph::GraphParseError;
using graph::MetricGraph;

int GraphTower::add_level(MetricGraph g) {
  Level lv;
  lv.basis = std::make_shared<graph::FreeBasis>(std::move(g));
  levels_.push_back(std::move(lv));
  return levels() - 1;
}

void GraphTower::set_embedding(int level, std::map<std::string, std::string> vertex_map) {
  levels_.at(static_cast<std::size_t>(level)).embed = std::move(vertex_map);
}

void GraphTower::add_rule(int level, const std::string& generator, std::vector<NamedLetter> image) {
  levels_.at(static_cast<std::size_t>(level)).rules[generator] = std::move(image);
}

bool GraphTower::has_rule(int level, const std::string& generator) const {
  return levels_.at(static_cast<std::size_t>(level)).rules.count(generator) > 0;
}

void GraphTower::validate() const {
  for (int n = 0; n + 1 < levels(); ++n) {
    const MetricGraph& a = graph(n);
    const MetricGraph& b = graph(n + 1);
    const auto& em = levels_[static_cast<std::size_t>(n)].embed;
    std::set<std::string> images;
    for (int v = 0; v < a.vertex_count(); ++v) {
      auto it = em.find(a.vertex_id(v));
      std::string target = it == em.end() ? a.vertex_id(v) : it->second;
      if (!b.has_vertex(target)) {
        throw GraphError("level " + std::to_string(n) + ": vertex '" + a.vertex_id(v) + "' maps to missing vertex '" +
                         target + "'");
      }
      if (!images.insert(target).second) {
        throw GraphError("level " + std::to_string(n) + ": embedding is not injective at '" + target + "'");
      }
      if (v == a.basepoint() && b.vertex_index(target) != b.basepoint()) {
        throw GraphError("level " + std::to_string(n) + ": embedding does not preserve the basepoint");
      }
    }
    for (const auto& [gen, image] : levels_[static_cast<std::size_t>(n)].rules) {
      basis(n).generator_named(gen);
      for (const auto& [name, sign] : image) {
        basis(n + 1).generator_named(name);
        if (sign == 0) throw GraphError("zero exponent in rule for '" + gen + "'");
      }
    }
    // Generators without rules must survive under their own name.
    for (int g = 0; g < basis(n).rank(); ++g) {
      const std::string& name = basis(n).generator_name(g);
      if (!has_rule(n, name)) basis(n + 1).generator_named(name);
    }
  }
}

Word GraphTower::expand(int level, const Word& w, int target) const {
  if (target < level || target >= levels()) throw GraphError("expansion target level out of range");
  Word cur = reduce_word(w);
  for (int n = level; n < target; ++n) {
    std::vector<Letter> out;
    const auto& rules = levels_[static_cast<std::size_t>(n)].rules;
    for (const auto& l : cur.letters()) {
      const std::string& name = basis(n).generator_name(l.generator);
      auto it = rules.find(name);
      std::vector<Letter> piece;
      if (it == rules.end()) {
        piece.push_back({basis(n + 1).generator_named(name), 1});
      } else {
        for (const auto& [child, sign] : it->second) {
          int g = basis(n + 1).generator_named(child);
          for (int k = 0; k < std::abs(sign); ++k) piece.push_back({g, sign > 0 ? 1 : -1});
        }
      }
      Word p(piece);
      if (l.sign < 0) p = p.inverse();
      out.insert(out.end(), p.letters().begin(), p.letters().end());
    }
    cur = reduce_word(Word(std::move(out)));
  }
  return cur;
}

namespace {

std::vector<NamedLetter> parse_named_word(const std::string& text) {
  std::vector<NamedLetter> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      try {
        sign = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw GraphError("bad exponent in '" + tok + "'");
      }
      tok.resize(caret);
    }
    if (tok.empty() || sign == 0) throw GraphError("bad word token");
    out.emplace_back(tok, sign);
  }
  return out;
}

}  // namespace

Word GraphTower::parse_element(int level, const std::string& text) const {
  std::vector<Letter> out;
  if (text == "1" || text == "e" || text.empty()) return Word();
  for (const auto& [name, sign] : parse_named_word(text)) {
    int g = basis(level).generator_named(name);
    for (int k = 0; k < std::abs(sign); ++k) out.push_back({g, sign > 0 ? 1 : -1});
  }
  return Word(std::move(out));
}

std::string GraphTower::element_to_string(int level, const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += " ";
    out += basis(level).generator_name(l.generator);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

GraphTower parse_tower(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  struct Block {
    std::string graph_text;
    int first_line = 0;
    std::map<std::string, std::string> embed;
    std::vector<std::pair<std::string, std::vector<NamedLetter>>> rules;
  };
  std::vector<Block> blocks;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ls(body);
    std::string kw;
    if (!(ls >> kw)) {
      if (!blocks.empty()) blocks.back().graph_text += "\n";
      continue;
    }
    int col = static_cast<int>(body.find(kw)) + 1;
    if (!header) {
      if (kw != "tower") throw GraphParseError("expected 'tower' header", lineno, col);
      header = true;
      continue;
    }
    if (kw == "level") {
      blocks.push_back({});
      blocks.back().first_line = lineno;
      continue;
    }
    if (blocks.empty()) throw GraphParseError("expected 'level' before '" + kw + "'", lineno, col);
    Block& b = blocks.back();
    if (kw == "embed") {
      std::string v, w, extra;
      if (!(ls >> v >> w) || (ls >> extra)) throw GraphParseError("expected 'embed <v> <w>'", lineno, col);
      b.embed[v] = w;
      b.graph_text += "\n";
    } else if (kw == "expand") {
      auto eq = body.find('=');
      std::string gen;
      if (eq == std::string::npos || !(ls >> gen) || gen == "=") {
        throw GraphParseError("expected 'expand <gen> = <word>'", lineno, col);
      }
      try {
        b.rules.emplace_back(gen, parse_named_word(body.substr(eq + 1)));
      } catch (const GraphError& e) {
        throw GraphParseError(e.what(), lineno, static_cast<int>(eq) + 2);
      }
      b.graph_text += "\n";
    } else {
      b.graph_text += line + "\n";
    }
  }
  if (!header) throw GraphParseError("empty tower file", 1, 1);
  if (blocks.empty()) throw GraphParseError("tower has no levels", lineno, 1);
  GraphTower t;
  for (const auto& b : blocks) t.add_level(graph::parse_graph(b.graph_text, b.first_line));
  for (std::size_t n = 0; n < blocks.size(); ++n) {
    if (n + 1 == blocks.size() && (!blocks[n].embed.empty() || !blocks[n].rules.empty())) {
      throw GraphParseError("last level cannot carry embed/expand lines", blocks[n].first_line, 1);
    }
    t.set_embedding(static_cast<int>(n), blocks[n].embed);
    for (const auto& [gen, image] : blocks[n].rules) t.add_rule(static_cast<int>(n), gen, image);
  }
  t.validate();
  return t;
}

GraphTower load_tower_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tower(buf.str());
}

namespace {

std::string pants_name(int i, int j) { return "g_{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

}  // namespace

GraphTower pants_tower(int levels) {
  GraphTower t;
  for (int i = 0; i < levels; ++i) {
    MetricGraph g;
    g.add_vertex("o");
    Rational len = Rational(2) / Rational(boost::multiprecision::cpp_int(1) << i);
    for (int j = 1; j <= (1 << i); ++j) g.add_edge(pants_name(i, j), "o", "o", Length(ExactLength(0, len)));
    g.set_basepoint("o");
    t.add_level(std::move(g));
  }
  for (int i = 0; i + 1 < levels; ++i) {
    for (int j = 1; j <= (1 << i); ++j) {
      t.add_rule(i, pants_name(i, j), {{pants_name(i + 1, 2 * j - 1), 1}, {pants_name(i + 1, 2 * j), 1}});
    }
  }
  t.validate();
  return t;
}

namespace {

GraphTower growing_wedge(int J, const std::function<Length(int)>& length_of) {
  GraphTower t;
  for (int level = 1; level <= J; ++level) {
    MetricGraph g;
    g.add_vertex("o");
    for (int j = 1; j <= level; ++j) g.add_edge("c" + std::to_string(j), "o", "o", length_of(j));
    g.set_basepoint("o");
    t.add_level(std::move(g));
  }
  t.validate();
  return t;
}

}  // namespace

GraphTower harmonic_wedge_tower(int J) {
  return growing_wedge(J, [](int j) { return Length(ExactLength(0, Rational(2) * (1 + Rational(1, j)))); });
}

GraphTower shrinking_wedge_tower(int J) {
  return growing_wedge(J, [](int j) { return Length(ExactLength(0, Rational(2, j))); });
}

GraphTower shrinking_loop_tower(int levels) {
  GraphTower t;
  for (int n = 1; n <= levels; ++n) {
    MetricGraph g;
    g.add_vertex("o");
    g.add_edge("g", "o", "o", Length(ExactLength(Rational(1, n))));
    g.set_basepoint("o");
    t.add_level(std::move(g));
  }
  t.validate();
  return t;
}

GraphTower slipping_barbell_tower(int levels) {
  GraphTower t;
  for (int n = 1; n <= levels; ++n) {
    Length loop(ExactLength(Rational(1, n)));
    t.add_level(graph::barbell(loop, loop, Length(ExactLength(1))));
  }
  t.validate();
  return t;
}

GraphTower constant_tower(const MetricGraph& g, int levels) {
  GraphTower t;
  for (int n = 0; n < levels; ++n) t.add_level(g);
  t.validate();
  return t;
}

}  // namespace covspec::tower
