#pragma once

#include <cstdint>
#include <vector>

#include "core/exact_length.hpp"
#include "core/spectrum.hpp"

namespace covspec {

using LatticeElement = std::vector<long long>;

/// Row-style Hermite normal form of the integer span of `generators` in Z^dim.
/// Zero rows are dropped, so two generating sets span the same sublattice iff
/// their normal forms are equal.
std::vector<LatticeElement> hermite_normal_form(std::vector<LatticeElement> generators,
                                                std::size_t dim);

/// Length of the deck transform of a flat torus (product of circles of the
/// given intrinsic diameters) that shifts lift coordinate i by 2 r_i v_i.
/// Throws std::invalid_argument on dimension mismatch.
double lattice_shift_length(const LatticeElement& v, const std::vector<double>& circle_diameters);

/// Sublattice of Z^k generated by deck transforms of length < 2*delta,
/// enumerated over the bounding box each coordinate allows. Comparisons use
/// exact arithmetic when diameters and delta share a common unit (1 or pi).
std::vector<LatticeElement> short_vector_sublattice(const std::vector<ExactLength>& circle_diameters,
                                                    const ExactLength& delta,
                                                    std::size_t box_budget = 2'000'000);

/// Covering spectrum of the flat torus S^1_{r_1} x ... x S^1_{r_k}.
Spectrum lattice_covering_spectrum(const std::vector<ExactLength>& circle_diameters);

}  // namespace covspec
