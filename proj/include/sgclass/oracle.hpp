#pragma once

// Randomized agreement check between the semigroup membership search and a
// staircase.

#include <cstdint>
#include <vector>

#include "sgclass/staircase.hpp"

namespace sgclass {

struct OracleResult {
  std::size_t samples = 0;
  std::size_t members = 0;  // samples that lie in S
  std::vector<LatticeVector> mismatches;
};

/// Draws `samples` group-adjacent vectors from a seeded mt19937_64: sums of
/// random generators, perturbed by a random +-1 step in half the draws.
OracleResult oracle_compare(const AffineSemigroup& s, const Staircase& t, std::size_t samples,
                            std::uint64_t seed = 1);

}  // namespace sgclass
