#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "core/word.hpp"

namespace covspec::graph {

enum class Verdict { kYes, kNo, kUndetermined };
std::string to_string(Verdict v);

struct Membership {
  Verdict verdict = Verdict::kUndetermined;
  std::string method;  // "free-reduction", "abelianization", "coset-enumeration", ...
};

/// Complete coset table of the trivial subgroup in a finite quotient.
struct CosetTable {
  int order = 0;
  // table[c][2*g] is c*g, table[c][2*g+1] is c*g^-1, over the reduced
  // generators of the owning NormalClosure.
  std::vector<std::vector<int>> table;
};

/// Normal closure N of a finite set of relators in the free group of the
/// given rank, with a layered decision procedure for membership:
/// Tietze elimination, then the free case, then an abelianization
/// certificate, then bounded Todd-Coxeter enumeration of F/N.
class NormalClosure {
 public:
  NormalClosure(int rank, std::vector<Word> relators, std::size_t coset_budget = 200'000);

  Membership contains(const Word& w) const;
  int rank() const { return rank_; }
  /// Image of w in the free group on the surviving generators, reduced.
  Word rewrite(const Word& w) const;
  const std::vector<Word>& reduced_relators() const { return relators_; }
  int surviving_generators() const { return static_cast<int>(survivors_.size()); }
  /// True when no relators survive elimination, i.e. F/N is free.
  bool quotient_is_free() const { return relators_.empty(); }
  /// Finite quotient if coset enumeration completes within budget.
  std::optional<CosetTable> finite_quotient() const;
  /// Coset reached from coset 0 by the image of w (table must be complete).
  static int act(const CosetTable& t, int coset, const Word& reduced_image);

 private:
  int rank_;
  std::size_t coset_budget_;
  std::vector<std::optional<Word>> images_;  // per original generator, over original ids
  std::vector<int> survivors_;               // original ids of surviving generators
  std::vector<int> new_index_;               // original id -> surviving index or -1
  std::vector<Word> relators_;               // over surviving indices
  mutable std::once_flag enumerated_;
  mutable std::shared_ptr<std::optional<CosetTable>> table_;
};

}  // namespace covspec::graph
