#pragma once

#include <cstdint>

namespace relalg {

class CoherentSystem;

enum class OracleMethod { exhaustive, monte_carlo };

// Probability mass of the level-j ideal, measured directly on the state
// space.  For a path system this equals R_j, for a cut system U_j.
struct OracleResult {
  double value = 0.0;
  OracleMethod method = OracleMethod::exhaustive;
  std::uint64_t samples = 0;  // Monte Carlo only
  std::uint64_t seed = 0;     // Monte Carlo only
};

// Sums the exact state masses prod_i (p_{i,s_i} - p_{i,s_i+1}) over all
// states contained in the level ideal.  Deterministic.  Deliberately avoids
// numerators and duals; only generator divisibility is shared with the
// implementation under test.  Refuses state spaces above state_limit.
OracleResult exhaustive_probability(const CoherentSystem& sys, int level,
                                    std::uint64_t state_limit = 10'000'000);

// Samples component levels from their exact distributions and counts ideal
// membership.  RNG is SplitMix64 seeded with `seed`; one stream, component
// draws in index order, so results are reproducible per seed.
OracleResult monte_carlo_probability(const CoherentSystem& sys, int level, std::uint64_t samples,
                                     std::uint64_t seed);

}  // namespace relalg
