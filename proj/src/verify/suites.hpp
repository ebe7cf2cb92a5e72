#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace covspec::verify {

struct SuiteResult {
  bool pass = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double worst = 0.0;
  std::vector<std::string> messages;  // one per failure

  void check(bool ok, const std::string& what);
};

/// Random points of S^3 x C^2 with |z3|^2 + |z4|^2 <= 1e6: displacement stays
/// above (sqrt 2 / 2) sqrt(|z3|^2 + |z4|^2) - 1e-6. `worst` is the smallest margin.
SuiteResult verify_wilking(int samples, std::uint64_t seed);

/// Covering spectrum inside the lower semiclosure of half the shift spectrum
/// on random graphs with at most six edges. `worst` counts violating values.
SuiteResult verify_covofshift(int graphs, std::uint64_t seed);

/// Rescaled lemmas on a preset: lengths <= 2, L^inf >= L^x0, basepoint
/// independence of L^inf, zero iff zero (complete models), invariance under
/// R in {2, 10}. `worst` is the largest deviation seen.
SuiteResult verify_rescaled_lemmas(const std::string& preset, long max_power = 3);

}  // namespace covspec::verify
