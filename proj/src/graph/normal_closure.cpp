#include "graph/normal_closure.hpp"

#include <algorithm>
#include <map>

#include "core/lattice.hpp"

namespace covspec::graph {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return "yes";
    case Verdict::kNo:
      return "no";
    default:
      return "undetermined";
  }
}

namespace {

constexpr std::size_t kMaxRelatorLetters = 200'000;

Word substitute(const Word& w, int x, const Word& image) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    if (l.generator != x) {
      out.push_back(l);
      continue;
    }
    const Word piece = l.sign > 0 ? image : image.inverse();
    out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return reduce_word(Word(std::move(out)));
}

void normalize_relators(std::vector<Word>& rels) {
  std::vector<Word> out;
  for (auto& r : rels) {
    Word c = conjugacy_normal_form(r, true);
    if (!c.empty()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  rels = std::move(out);
}

// Bounded HLT coset enumeration of the trivial subgroup.
class ToddCoxeter {
 public:
  ToddCoxeter(int gens, const std::vector<Word>& rels, std::size_t budget)
      : cols_(2 * gens), budget_(budget) {
    for (const auto& r : rels) {
      std::vector<int> cr;
      for (const auto& l : r.letters()) cr.push_back(2 * l.generator + (l.sign < 0 ? 1 : 0));
      rels_.push_back(std::move(cr));
    }
  }

  std::optional<CosetTable> run() {
    new_coset();
    for (int a = 0; a < static_cast<int>(table_.size()); ++a) {
      if (!live(a)) continue;
      for (const auto& r : rels_) {
        if (!live(a)) break;
        if (!scan_and_fill(a, r)) return std::nullopt;
      }
      if (!live(a)) continue;
      for (int x = 0; x < cols_; ++x) {
        if (table_[a][x] < 0 && !define(a, x)) return std::nullopt;
      }
    }
    // Compact live cosets.
    std::vector<int> index(table_.size(), -1);
    CosetTable out;
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      if (live(c)) index[c] = out.order++;
    }
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      if (!live(c)) continue;
      std::vector<int> row(cols_);
      for (int x = 0; x < cols_; ++x) row[x] = index[rep(table_[c][x])];
      out.table.push_back(std::move(row));
    }
    return out;
  }

 private:
  static int inv(int x) { return x ^ 1; }
  bool live(int c) const { return parent_[c] == c; }

  int new_coset() {
    table_.emplace_back(cols_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  bool define(int c, int x) {
    if (table_.size() >= budget_) return false;
    int n = new_coset();
    table_[c][x] = n;
    table_[n][inv(x)] = c;
    return true;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int g = queue[i];
      for (int x = 0; x < cols_; ++x) {
        int d = table_[g][x];
        if (d < 0) continue;
        table_[d][inv(x)] = -1;
        int m = rep(g), n = rep(d);
        if (table_[m][x] >= 0) {
          merge(n, table_[m][x], queue);
        } else if (table_[n][inv(x)] >= 0) {
          merge(m, table_[n][inv(x)], queue);
        } else {
          table_[m][x] = n;
          table_[n][inv(x)] = m;
        }
      }
    }
  }

  bool scan_and_fill(int c, const std::vector<int>& r) {
    int n = static_cast<int>(r.size());
    while (true) {
      int f = c, i = 0, b = c, j = n - 1;
      while (i <= j && table_[f][r[i]] >= 0) f = table_[f][r[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && table_[b][inv(r[j])] >= 0) b = table_[b][inv(r[j--])];
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        table_[f][r[i]] = b;
        table_[b][inv(r[i])] = f;
        return true;
      }
      if (!define(f, r[i])) return false;
    }
  }

  int cols_;
  std::size_t budget_;
  std::vector<std::vector<int>> rels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

}  // namespace

NormalClosure::NormalClosure(int rank, std::vector<Word> relators, std::size_t coset_budget)
    : rank_(rank), coset_budget_(coset_budget), images_(static_cast<std::size_t>(rank)) {
  for (const auto& r : relators) {
    for (const auto& l : r.letters()) {
      if (l.generator < 0 || l.generator >= rank) throw std::invalid_argument("relator uses unknown generator");
    }
  }
  normalize_relators(relators);
  // Single-letter relators kill their generator; remove them in one pass.
  {
    std::vector<bool> killed(static_cast<std::size_t>(rank), false);
    for (const auto& r : relators) {
      if (r.size() == 1) killed[static_cast<std::size_t>(r[0].generator)] = true;
    }
    std::vector<Word> kept;
    for (const auto& r : relators) {
      std::vector<Letter> out;
      for (const auto& l : r.letters()) {
        if (!killed[static_cast<std::size_t>(l.generator)]) out.push_back(l);
      }
      kept.push_back(Word(std::move(out)));
    }
    for (int g = 0; g < rank; ++g) {
      if (killed[static_cast<std::size_t>(g)]) images_[static_cast<std::size_t>(g)] = Word();
    }
    normalize_relators(kept);
    relators = std::move(kept);
  }
  // Tietze: eliminate a generator that occurs exactly once in some relator.
  while (true) {
    bool eliminated = false;
    for (std::size_t ri = 0; ri < relators.size() && !eliminated; ++ri) {
      const Word& r = relators[ri];
      std::map<int, int> count;
      for (const auto& l : r.letters()) ++count[l.generator];
      for (const auto& [x, k] : count) {
        if (k != 1) continue;
        std::size_t pos = 0;
        while (r[pos].generator != x) ++pos;
        std::vector<Letter> rot(r.letters().begin() + static_cast<long>(pos), r.letters().end());
        rot.insert(rot.end(), r.letters().begin(), r.letters().begin() + static_cast<long>(pos));
        int sign = rot.front().sign;
        Word rest(std::vector<Letter>(rot.begin() + 1, rot.end()));
        // x^s * rest = 1  =>  x = rest^-1 (s = +1) or x = rest (s = -1)
        Word image = sign > 0 ? rest.inverse() : rest;
        std::size_t total = 0;
        std::vector<Word> next;
        for (std::size_t rj = 0; rj < relators.size(); ++rj) {
          if (rj == ri) continue;
          next.push_back(substitute(relators[rj], x, image));
          total += next.back().size();
        }
        if (total > kMaxRelatorLetters) continue;
        for (auto& im : images_) {
          if (im) *im = substitute(*im, x, image);
        }
        images_[static_cast<std::size_t>(x)] = image;
        normalize_relators(next);
        relators = std::move(next);
        eliminated = true;
        break;
      }
    }
    if (!eliminated) break;
  }
  new_index_.assign(static_cast<std::size_t>(rank), -1);
  for (int g = 0; g < rank; ++g) {
    if (!images_[static_cast<std::size_t>(g)]) {
      new_index_[static_cast<std::size_t>(g)] = static_cast<int>(survivors_.size());
      survivors_.push_back(g);
    }
  }
  for (const auto& r : relators) relators_.push_back(rewrite(r));
  normalize_relators(relators_);
  table_ = std::make_shared<std::optional<CosetTable>>();
}

Word NormalClosure::rewrite(const Word& w) const {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    if (l.generator < 0 || l.generator >= rank_) throw std::invalid_argument("word uses unknown generator");
    const auto& im = images_[static_cast<std::size_t>(l.generator)];
    if (!im) {
      out.push_back({new_index_[static_cast<std::size_t>(l.generator)], l.sign});
      continue;
    }
    Word piece = l.sign > 0 ? *im : im->inverse();
    for (const auto& p : piece.letters()) out.push_back({new_index_[static_cast<std::size_t>(p.generator)], p.sign});
  }
  return reduce_word(Word(std::move(out)));
}

std::optional<CosetTable> NormalClosure::finite_quotient() const {
  std::call_once(enumerated_, [this] {
    *table_ = ToddCoxeter(surviving_generators(), relators_, coset_budget_).run();
  });
  return *table_;
}

int NormalClosure::act(const CosetTable& t, int coset, const Word& reduced_image) {
  for (const auto& l : reduced_image.letters()) {
    coset = t.table[static_cast<std::size_t>(coset)][static_cast<std::size_t>(2 * l.generator + (l.sign < 0 ? 1 : 0))];
  }
  return coset;
}

Membership NormalClosure::contains(const Word& w) const {
  Word image = rewrite(w);
  if (image.empty()) return {Verdict::kYes, relators_.empty() ? "free-reduction" : "tietze"};
  if (relators_.empty()) return {Verdict::kNo, "free-reduction"};
  Word nf = conjugacy_normal_form(image, true);
  if (nf.empty()) return {Verdict::kYes, "conjugate-reduction"};
  for (const auto& r : relators_) {
    if (r == nf) return {Verdict::kYes, "relator-conjugate"};
  }
  const std::size_t dim = survivors_.size();
  auto abel = [dim](const Word& x) {
    LatticeElement v(dim, 0);
    for (const auto& l : x.letters()) v[static_cast<std::size_t>(l.generator)] += l.sign;
    return v;
  };
  std::vector<LatticeElement> rows;
  for (const auto& r : relators_) rows.push_back(abel(r));
  auto base = hermite_normal_form(rows, dim);
  rows.push_back(abel(image));
  if (hermite_normal_form(rows, dim) != base) return {Verdict::kNo, "abelianization"};
  auto table = finite_quotient();
  if (!table) return {Verdict::kUndetermined, "coset-budget"};
  return {act(*table, 0, image) == 0 ? Verdict::kYes : Verdict::kNo, "coset-enumeration"};
}

}  // namespace covspec::graph
