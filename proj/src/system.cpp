#include "relalg/system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "relalg/duality.hpp"
#include "relalg/errors.hpp"
#include "relalg/oracle.hpp"

namespace relalg {

namespace {

constexpr double kGateGridLimit = 100000.0;   // exhaustive validation up to here
constexpr double kGateTolerance = 1e-9;

// Complements a bound table: rows bounding q become rows bounding 1 - q.
std::vector<BoundRow> complement_rows(std::vector<BoundRow> rows) {
  for (BoundRow& r : rows) {
    r.value = 1.0 - r.value;
    if (r.kind == BoundKind::upper)
      r.kind = BoundKind::lower;
    else if (r.kind == BoundKind::lower)
      r.kind = BoundKind::upper;
  }
  return rows;
}

void mark_last_exact(std::vector<BoundRow>& rows) {
  if (!rows.empty()) rows.back().kind = BoundKind::exact;
}

}  // namespace

const char* to_string(SystemKind k) { return k == SystemKind::path ? "path" : "cut"; }
const char* to_string(Route r) { return r == Route::primal ? "primal" : "dual"; }

CoherentSystem::CoherentSystem(SystemKind kind, Exponents caps,
                               std::vector<MonomialIdeal> level_ideals, ProbabilityTable table)
    : kind_(kind),
      caps_(std::move(caps)),
      ideals_(std::move(level_ideals)),
      table_(std::move(table)) {
  int n = static_cast<int>(caps_.size());
  if (n < 1) throw PreconditionError("system needs at least one component");
  if (ideals_.empty()) throw PreconditionError("system needs at least one level");
  if (table_.components() != n)
    throw PreconditionError("probability table has " + std::to_string(table_.components()) +
                            " rows for " + std::to_string(n) + " components");
  for (int i = 0; i < n; ++i) {
    if (caps_[static_cast<std::size_t>(i)] < 1)
      throw PreconditionError("component cap of x" + std::to_string(i + 1) + " must be at least 1");
    if (table_.cap(i) != caps_[static_cast<std::size_t>(i)])
      throw PreconditionError("probability row length for component " + std::to_string(i + 1) +
                              " does not match its cap");
  }
  for (std::size_t j = 0; j < ideals_.size(); ++j) {
    if (ideals_[j].nvars() != n)
      throw PreconditionError("level " + std::to_string(j + 1) +
                              " ideal has the wrong number of variables");
    for (const Monomial& g : ideals_[j].generators())
      for (int i = 0; i < n; ++i)
        if (g[i] > caps_[static_cast<std::size_t>(i)])
          throw PreconditionError("level " + std::to_string(j + 1) +
                                  " generator exceeds the cap of x" + std::to_string(i + 1));
  }
  cache_.resize(ideals_.size());
}

CoherentSystem::CoherentSystem(const CoherentSystem& other)
    : kind_(other.kind_), caps_(other.caps_), ideals_(other.ideals_), table_(other.table_) {
  cache_.resize(ideals_.size());  // caches are rebuilt, not copied
}

void CoherentSystem::check_level(int j) const {
  if (j < 1 || j > levels())
    throw PreconditionError("level " + std::to_string(j) + " out of range 1.." +
                            std::to_string(levels()));
}

const MonomialIdeal& CoherentSystem::level_ideal(int j) const {
  check_level(j);
  return ideals_[static_cast<std::size_t>(j - 1)];
}

bool CoherentSystem::is_binary() const {
  return std::all_of(caps_.begin(), caps_.end(), [](int c) { return c == 1; });
}

double CoherentSystem::state_count() const {
  double total = 1.0;
  for (int c : caps_) {
    total *= static_cast<double>(c) + 1.0;
    if (total > 1e18) return 1e18;
  }
  return total;
}

bool CoherentSystem::is_nested() const {
  for (int j = 1; j < levels(); ++j) {
    const MonomialIdeal& lower = ideals_[static_cast<std::size_t>(j - 1)];
    for (const Monomial& g : ideals_[static_cast<std::size_t>(j)].generators())
      if (!lower.contains(g)) return false;
  }
  return true;
}

const HilbertNumerator& CoherentSystem::numerator(int j, Route route) const {
  check_level(j);
  LevelCache& slot = cache_[static_cast<std::size_t>(j - 1)];
  auto& opt = (route == Route::primal) ? slot.primal_hn : slot.dual_hn;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (opt) return *opt;
  }
  const MonomialIdeal& ideal = (route == Route::primal) ? level_ideal(j) : boundary_dual_ideal(j);
  HilbertNumerator hn = mayer_vietoris_numerator(ideal);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!opt) opt.emplace(std::move(hn));
  return *opt;
}

const MonomialIdeal& CoherentSystem::boundary_dual_ideal(int j) const {
  check_level(j);
  LevelCache& slot = cache_[static_cast<std::size_t>(j - 1)];
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (slot.dual) return *slot.dual;
  }
  MonomialIdeal dual = boundary_dual(level_ideal(j), caps_);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!slot.dual) slot.dual.emplace(std::move(dual));
  return *slot.dual;
}

double CoherentSystem::primal_value(int j) const { return evaluate(numerator(j, Route::primal), table_); }

double CoherentSystem::dual_value_unchecked(int j) const {
  const HilbertNumerator& hn = numerator(j, Route::dual);
  Exponents shifted(caps_);
  for (int& c : shifted) ++c;
  double v = 0.0;
  for (const SignedSummand& s : hn.summands) {
    Exponents e(shifted);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= s.multidegree[static_cast<int>(i)];
    v += s.sign() * pr_bar(Monomial(std::move(e)), table_);
  }
  return v;
}

double CoherentSystem::dual_value(int j) const {
  if (!dual_route_supported(j))
    throw UnsupportedRouteError("dual route not admitted at level " + std::to_string(j) +
                                "; use the primal route");
  return dual_value_unchecked(j);
}

bool CoherentSystem::dual_route_supported(int j) const {
  check_level(j);
  LevelCache& slot = cache_[static_cast<std::size_t>(j - 1)];
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (slot.dual_admitted) return *slot.dual_admitted;
  }
  bool admitted;
  if (state_count() > kGateGridLimit) {
    admitted = is_binary();
  } else {
    // Small grid: check the dual evaluation against the exhaustive oracle.
    double claimed_outside = dual_value_unchecked(j);
    double inside = exhaustive_probability(*this, j).value;
    admitted = std::abs(claimed_outside - (1.0 - inside)) <= kGateTolerance;
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!slot.dual_admitted) slot.dual_admitted = admitted;
  return *slot.dual_admitted;
}

Route CoherentSystem::choose_route(int j) const {
  check_level(j);
  const MonomialIdeal& primal = level_ideal(j);
  if (primal.is_zero() || primal.is_unit()) return Route::primal;
  if (!dual_route_supported(j)) return Route::primal;
  return boundary_dual_ideal(j).generator_count() < primal.generator_count() ? Route::dual
                                                                             : Route::primal;
}

double CoherentSystem::reliability(int j) const { return reliability(j, choose_route(j)); }

double CoherentSystem::reliability(int j, Route route) const {
  check_level(j);
  const MonomialIdeal& ideal = level_ideal(j);
  double inside;  // P(state in I_j)
  if (route == Route::primal) {
    inside = ideal.is_zero() ? 0.0 : primal_value(j);
    return kind_ == SystemKind::path ? inside : 1.0 - inside;
  }
  double outside = dual_value(j);  // P(state outside I_j)
  return kind_ == SystemKind::path ? 1.0 - outside : outside;
}

double CoherentSystem::unreliability(int j) const { return 1.0 - reliability(j); }

double CoherentSystem::unreliability(int j, Route route) const { return 1.0 - reliability(j, route); }

double CoherentSystem::unreliability_via_dual(int j) const {
  double outside = dual_value(j);
  return kind_ == SystemKind::path ? outside : 1.0 - outside;
}

std::vector<BoundRow> CoherentSystem::reliability_bounds(int j, Route route) const {
  check_level(j);
  std::vector<BoundRow> rows;
  if (route == Route::primal) {
    rows = evaluate_bounds(numerator(j, Route::primal), table_);  // bounds P(in I_j)
    if (kind_ == SystemKind::cut) rows = complement_rows(std::move(rows));
  } else {
    if (!dual_route_supported(j))
      throw UnsupportedRouteError("dual route not admitted at level " + std::to_string(j));
    // Bound table for P(outside I_j) via the dual substitution.
    const HilbertNumerator& hn = numerator(j, Route::dual);
    Exponents shifted(caps_);
    for (int& c : shifted) ++c;
    int maxdim = hn.max_dimension();
    for (int t = 1; t <= maxdim; ++t) {
      double v = 0.0;
      for (const SignedSummand& s : hn.summands) {
        if (s.dimension > t) continue;
        Exponents e(shifted);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= s.multidegree[static_cast<int>(i)];
        v += s.sign() * pr_bar(Monomial(std::move(e)), table_);
      }
      rows.push_back({t, v, (t % 2 == 1) ? BoundKind::upper : BoundKind::lower});
    }
    if (kind_ == SystemKind::path) rows = complement_rows(std::move(rows));
  }
  mark_last_exact(rows);
  return rows;
}

std::vector<BoundRow> CoherentSystem::unreliability_bounds(int j, Route route) const {
  std::vector<BoundRow> rows = reliability_bounds(j, route);
  for (BoundRow& r : rows) {
    r.value = 1.0 - r.value;
    if (r.kind == BoundKind::upper)
      r.kind = BoundKind::lower;
    else if (r.kind == BoundKind::lower)
      r.kind = BoundKind::upper;
  }
  return rows;
}

std::vector<Exponents> CoherentSystem::minimal_paths(int j) const {
  check_level(j);
  std::vector<Exponents> out;
  if (kind_ == SystemKind::path) {
    for (const Monomial& g : level_ideal(j).generators()) out.push_back(g.exponents());
  } else {
    for (const Monomial& g : boundary_dual_ideal(j).generators())
      out.push_back(boundary_state(caps_, g));
    std::sort(out.begin(), out.end());  // decoded states in canonical order too
  }
  return out;
}

std::vector<Exponents> CoherentSystem::minimal_cuts(int j) const {
  check_level(j);
  std::vector<Exponents> out;
  if (kind_ == SystemKind::cut) {
    for (const Monomial& g : level_ideal(j).generators()) out.push_back(g.exponents());
  } else {
    for (const Monomial& g : boundary_dual_ideal(j).generators())
      out.push_back(boundary_state(caps_, g));
    std::sort(out.begin(), out.end());
  }
  return out;
}

double CoherentSystem::gn_max_min_path_bound(int j) const {
  check_level(j);
  double best = 0.0;
  if (kind_ == SystemKind::path) {
    // P(state >= y) for a single minimal path y.
    for (const Monomial& g : level_ideal(j).generators()) best = std::max(best, pr(g, table_));
  } else {
    // Here a minimal path is a maximal non-failing state b; P(state <= b).
    for (const Exponents& b : minimal_paths(j)) best = std::max(best, pr_bar(Monomial(b), table_));
  }
  return best;
}

double CoherentSystem::gn_coproduct_min_cuts_bound(int j) const {
  check_level(j);
  double bound = 1.0;
  if (kind_ == SystemKind::path) {
    // Product over minimal cuts z of the coproduct 1 - prod_i (1 - p_{i,z_i+1});
    // cap coordinates contribute factors p = 0.
    for (const Exponents& z : minimal_cuts(j)) bound *= 1.0 - pr_bar(Monomial(z), table_);
  } else {
    // Cut-system mirror: the cuts are the generators themselves.
    for (const Monomial& z : level_ideal(j).generators()) bound *= 1.0 - pr(z, table_);
  }
  return bound;
}

}  // namespace relalg
