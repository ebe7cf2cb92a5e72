#pragma once

#include <cstddef>
#include <vector>

#include "graph/tree_action.hpp"

namespace covspec::graph {

/// An immersed cycle: a closed non-backtracking walk whose last step does not
/// undo its first, stored in a canonical rotation/orientation.
struct Cycle {
  EdgePath path;
  Word word;  // chords crossed; its conjugacy class is the free homotopy class
  Length length;
};

struct CycleEnumeration {
  std::vector<Cycle> cycles;  // sorted by length, then canonical path
  bool truncated = false;     // walk budget exhausted; list may be incomplete
  std::size_t walks = 0;
};

/// All immersed cycles of length < bound (or <= bound when `inclusive`), up
/// to rotation and inversion. The budget caps the number of partial walks.
CycleEnumeration enumerate_cycles(const FreeBasis& basis, const Length& bound, bool inclusive = false,
                                  std::size_t walk_budget = 4'000'000);

struct ShiftValue {
  Length length;
  int multiplicity = 0;  // number of distinct immersed cycles with this length
};

struct ShiftSpectrum {
  std::vector<ShiftValue> values;  // ascending
  Length bound;                    // complete below this length unless truncated
  bool truncated = false;
};

/// Translation lengths of all nontrivial conjugacy classes below Lmax.
/// Throws std::invalid_argument when Lmax <= 0.
ShiftSpectrum shift_spectrum(const MetricGraph& g, const Length& Lmax, std::size_t walk_budget = 4'000'000);

}  // namespace covspec::graph
