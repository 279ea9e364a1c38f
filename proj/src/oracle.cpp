#include "relalg/oracle.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "relalg/errors.hpp"
#include "relalg/system.hpp"

namespace relalg {

namespace {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace

OracleResult exhaustive_probability(const CoherentSystem& sys, int level,
                                    std::uint64_t state_limit) {
  const MonomialIdeal& ideal = sys.level_ideal(level);
  int n = sys.components();
  const Exponents& caps = sys.caps();

  double total_states = sys.state_count();
  if (total_states > static_cast<double>(state_limit))
    throw ResourceLimitError("exhaustive oracle refused: state space exceeds the limit of " +
                             std::to_string(state_limit) + " states");

  // Exact per-level masses, so membership is the only system code exercised.
  std::vector<std::vector<double>> mass(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int cap = caps[static_cast<std::size_t>(i)];
    mass[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(cap) + 1);
    for (int l = 0; l <= cap; ++l)
      mass[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] = sys.table().level_mass(i, l);
  }

  Exponents state(static_cast<std::size_t>(n), 0);
  double acc = 0.0;
  while (true) {
    if (ideal.contains(state)) {
      double m = 1.0;
      for (int i = 0; i < n; ++i)
        m *= mass[static_cast<std::size_t>(i)][static_cast<std::size_t>(state[static_cast<std::size_t>(i)])];
      acc += m;
    }
    // mixed-radix odometer
    int i = n - 1;
    while (i >= 0 && state[static_cast<std::size_t>(i)] == caps[static_cast<std::size_t>(i)]) {
      state[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++state[static_cast<std::size_t>(i)];
  }

  return {acc, OracleMethod::exhaustive, 0, 0};
}

OracleResult monte_carlo_probability(const CoherentSystem& sys, int level, std::uint64_t samples,
                                     std::uint64_t seed) {
  if (samples == 0) throw PreconditionError("monte carlo oracle needs at least one sample");
  const MonomialIdeal& ideal = sys.level_ideal(level);
  int n = sys.components();
  const Exponents& caps = sys.caps();

  SplitMix64 rng{seed};
  Exponents state(static_cast<std::size_t>(n), 0);
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < samples; ++k) {
    for (int i = 0; i < n; ++i) {
      // level = largest l with u < p_{i,l}; P(level >= l) = p_{i,l}.
      double u = rng.uniform01();
      int l = 0;
      while (l < caps[static_cast<std::size_t>(i)] && u < sys.table().at_least(i, l + 1)) ++l;
      state[static_cast<std::size_t>(i)] = l;
    }
    if (ideal.contains(state)) ++hits;
  }
  return {static_cast<double>(hits) / static_cast<double>(samples), OracleMethod::monte_carlo,
          samples, seed};
}

}  // namespace relalg
