#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "relalg/ideal.hpp"
#include "relalg/monomial.hpp"
#include "relalg/numerator.hpp"
#include "relalg/probability.hpp"

namespace relalg {

// How the level ideals are read.  In a path system the ideal at level j
// collects the states performing at level j or better, so its measure is the
// reliability R_j.  In a cut system the ideal collects the states failing at
// level j or worse and its measure is the unreliability U_j.  The algebra
// never branches on this; only the interpretation of results does.
enum class SystemKind { path, cut };

// Evaluation route: through the level ideal itself or through its boundary
// dual (whichever has fewer generators is usually cheaper).
enum class Route { primal, dual };

const char* to_string(SystemKind k);
const char* to_string(Route r);

// A multi-state coherent system: n components with levels 0..M_i, system
// levels 1..M, one monomial ideal per system level, and a probability table.
// All queries are per level.  The object is immutable; internal per-level
// artifacts (numerators, duals, route admission) are cached lazily and
// race-safely, so concurrent use is fine.
class CoherentSystem {
 public:
  CoherentSystem(SystemKind kind, Exponents caps, std::vector<MonomialIdeal> level_ideals,
                 ProbabilityTable table);
  CoherentSystem(const CoherentSystem&);
  CoherentSystem& operator=(const CoherentSystem&) = delete;

  SystemKind kind() const { return kind_; }
  int components() const { return static_cast<int>(caps_.size()); }
  int levels() const { return static_cast<int>(ideals_.size()); }
  const Exponents& caps() const { return caps_; }
  const ProbabilityTable& table() const { return table_; }
  const MonomialIdeal& level_ideal(int j) const;

  bool is_binary() const;
  // Number of component state vectors, saturating at a large sentinel.
  double state_count() const;
  // True when every level-(j+1) generator already lies in the level-j ideal;
  // systems coming from a structure function are nested.  Reported, never
  // enforced.
  bool is_nested() const;

  // P(system works at level j or better).  The automatic route is
  // choose_route(j); a forced dual route throws UnsupportedRouteError when
  // not admitted.
  double reliability(int j) const;
  double reliability(int j, Route route) const;
  // Exact complement of reliability, same route handling.
  double unreliability(int j) const;
  double unreliability(int j, Route route) const;

  // U_j computed through the boundary dual numerator:
  //   sum over summands (sigma, sign) of sign * pr_bar((M+1) - sigma),
  // an inclusion-exclusion over the maximal states outside the ideal.
  // Throws UnsupportedRouteError when the dual route is not admitted.
  double unreliability_via_dual(int j) const;

  // Truncation bound tables, by default from the level ideal's own
  // Mayer-Vietoris numerator (route = primal); the final row is exact.
  std::vector<BoundRow> reliability_bounds(int j, Route route = Route::primal) const;
  std::vector<BoundRow> unreliability_bounds(int j, Route route = Route::primal) const;

  // Minimal j-paths and minimal j-cuts as state vectors.  For a path system
  // the paths are the generator exponents and the cuts are the boundary
  // states of the dual; for a cut system the roles swap.
  std::vector<Exponents> minimal_paths(int j) const;
  std::vector<Exponents> minimal_cuts(int j) const;

  // Lower bounds for R_j from single paths and from cut coproducts.
  double gn_max_min_path_bound(int j) const;
  double gn_coproduct_min_cuts_bound(int j) const;

  // Route with the smaller generating set wins; ties and inadmissible duals
  // fall back to primal.
  Route choose_route(int j) const;

  // The dual route is admitted per level: on grids of at most 10^5 states it
  // is checked once against the exhaustive oracle, on larger grids it is
  // admitted only for binary systems.
  bool dual_route_supported(int j) const;

  // Cached artifacts (computed on first use).
  const MonomialIdeal& boundary_dual_ideal(int j) const;
  const HilbertNumerator& numerator(int j, Route route) const;

 private:
  struct LevelCache {
    std::optional<HilbertNumerator> primal_hn;
    std::optional<MonomialIdeal> dual;
    std::optional<HilbertNumerator> dual_hn;
    std::optional<bool> dual_admitted;
  };

  void check_level(int j) const;
  // P(state in I_j) via the primal numerator.
  double primal_value(int j) const;
  // P(state outside I_j) via the boundary dual numerator.
  double dual_value(int j) const;
  double dual_value_unchecked(int j) const;

  SystemKind kind_;
  Exponents caps_;
  std::vector<MonomialIdeal> ideals_;
  ProbabilityTable table_;

  mutable std::mutex cache_mutex_;
  mutable std::vector<LevelCache> cache_;
};

}  // namespace relalg
