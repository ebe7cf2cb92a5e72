#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/spectrum.hpp"
#include "graph/cycles.hpp"
#include "graph/normal_closure.hpp"

namespace covspec::graph {

struct GraphSpectrumOptions {
  /// Cycles up to this length (inclusive) are enumerated. Defaults to the
  /// largest translation length of a basis generator, which suffices to
  /// reach the whole group and hence a complete spectrum.
  std::optional<Length> Lmax;
  std::size_t walk_budget = 4'000'000;
  std::size_t coset_budget = 200'000;
  bool detect_accumulation = true;
};

struct GraphSpectrumReport {
  Spectrum spectrum;
  Length Lmax;
  std::size_t cycles = 0;
  bool truncated = false;       // cycle enumeration hit its budget
  bool reached_whole_group = false;
};

/// Covering spectrum of a finite metric graph. A candidate delta = L/2 (L an
/// immersed-cycle length) is a breakpoint iff some cycle of length exactly L
/// lies outside the normal closure of the strictly shorter cycles.
GraphSpectrumReport covering_spectrum_report(const MetricGraph& g, const GraphSpectrumOptions& opts = {});
Spectrum covering_spectrum_graph(const MetricGraph& g, std::optional<Length> Lmax = std::nullopt);

/// Normal closure generated by all immersed cycles of length < 2*delta.
/// `truncated` is set when the cycle enumeration hit its walk budget, in
/// which case the relator set (and any "no" verdict) is incomplete.
NormalClosure delta_subgroup(const FreeBasis& basis, const Length& delta, std::size_t coset_budget = 200'000,
                             bool* truncated = nullptr);

struct DeltaCover {
  MetricGraph cover;
  std::vector<int> projection;  // cover vertex index -> base vertex index
  bool partial = false;         // true: a ball in an infinite (or unresolved) cover
  int sheets = 0;               // number of sheets when finite
  int radius = 0;               // combinatorial BFS radius of a partial ball
  bool unresolved_identifications = false;
};

/// The delta cover X~/pi_1(X, delta): explicit when the deck group is finite
/// within the coset budget, otherwise a BFS ball around the base lift with at
/// most `ball_vertices` vertices.
DeltaCover delta_cover_graph(const MetricGraph& g, const Length& delta, std::size_t coset_budget = 200'000,
                             int ball_vertices = 200);

struct CovOfShiftReport {
  bool pass = true;
  std::vector<double> violations;
  Spectrum covering;
  std::vector<Length> half_shift;  // distinct halves of shift values, ascending
};

/// Checks that the covering spectrum lies in the lower semiclosure of half
/// the shift spectrum, both computed with a common Lmax.
CovOfShiftReport covofshift_check(const MetricGraph& g, std::optional<Length> Lmax = std::nullopt);

}  // namespace covspec::graph
