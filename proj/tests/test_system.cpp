#include "relalg/system.hpp"

#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include <doctest.h>

#include "relalg/builders.hpp"
#include "relalg/errors.hpp"
#include "relalg/oracle.hpp"

using namespace relalg;

namespace {

Monomial m(Exponents e) { return Monomial(std::move(e)); }

CoherentSystem series3() {
  return build_series(ProbabilityTable({{0.8, 0.75}, {0.9, 0.8}, {0.75, 0.7}}));
}

CoherentSystem parallel3() {
  return build_parallel(ProbabilityTable({{0.25, 0.2}, {0.2, 0.1}, {0.3, 0.25}}));
}

ProbabilityTable random_table(int n, int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n));
  for (auto& r : rows) {
    r.resize(static_cast<std::size_t>(m));
    for (auto& p : r) p = u(rng);
    std::sort(r.begin(), r.end(), std::greater<>());
  }
  return ProbabilityTable(rows);
}

// Random single-kind system with nested level ideals (union of the higher
// levels' generators keeps each level inside the previous one).
CoherentSystem random_nested_system(int n, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gens(1, 4), exp(0, m), kind(0, 1);
  std::vector<std::vector<Monomial>> raw(static_cast<std::size_t>(m));
  for (int j = m - 1; j >= 0; --j) {
    raw[static_cast<std::size_t>(j)].clear();
    for (int k = gens(rng); k > 0; --k) {
      Exponents e(static_cast<std::size_t>(n));
      for (auto& x : e) x = exp(rng);
      raw[static_cast<std::size_t>(j)].emplace_back(std::move(e));
    }
    if (j + 1 < m)
      for (const Monomial& g : raw[static_cast<std::size_t>(j + 1)])
        raw[static_cast<std::size_t>(j)].push_back(g);
  }
  std::vector<MonomialIdeal> ideals;
  for (auto& g : raw) ideals.emplace_back(n, std::move(g));
  return CoherentSystem(kind(rng) == 0 ? SystemKind::path : SystemKind::cut, Exponents(n, m),
                        std::move(ideals), random_table(n, m, rng));
}

}  // namespace

TEST_CASE("series system golden values") {
  CoherentSystem s = series3();
  CHECK(s.kind() == SystemKind::path);
  CHECK(s.components() == 3);
  CHECK(s.levels() == 2);
  CHECK(s.is_nested());
  CHECK_FALSE(s.is_binary());
  CHECK(s.state_count() == 27.0);

  CHECK(s.reliability(1) == doctest::Approx(0.54).epsilon(1e-9));
  CHECK(s.reliability(2) == doctest::Approx(0.42).epsilon(1e-9));
  CHECK(s.unreliability(1) == doctest::Approx(0.46).epsilon(1e-9));
  CHECK(s.unreliability(2) == doctest::Approx(0.58).epsilon(1e-9));

  CHECK(s.minimal_paths(1) == std::vector<Exponents>{{1, 1, 1}});
  CHECK(s.minimal_paths(2) == std::vector<Exponents>{{2, 2, 2}});
  CHECK(s.minimal_cuts(1) == std::vector<Exponents>{{0, 2, 2}, {2, 0, 2}, {2, 2, 0}});
  CHECK(s.minimal_cuts(2) == std::vector<Exponents>{{1, 2, 2}, {2, 1, 2}, {2, 2, 1}});

  CHECK_THROWS_AS(s.reliability(0), PreconditionError);
  CHECK_THROWS_AS(s.reliability(3), PreconditionError);
}

TEST_CASE("parallel system golden values and bound rows") {
  CoherentSystem s = parallel3();
  CHECK(s.kind() == SystemKind::cut);
  CHECK(s.unreliability(1) == doctest::Approx(0.58).epsilon(1e-9));
  CHECK(s.unreliability(2) == doctest::Approx(0.46).epsilon(1e-9));
  CHECK(s.reliability(2) == doctest::Approx(0.54).epsilon(1e-9));

  std::vector<BoundRow> rows = s.unreliability_bounds(2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].value == doctest::Approx(0.55).epsilon(1e-9));
  CHECK(rows[0].kind == BoundKind::upper);
  CHECK(rows[1].value == doctest::Approx(0.455).epsilon(1e-9));
  CHECK(rows[1].kind == BoundKind::lower);
  CHECK(rows[2].value == doctest::Approx(0.46).epsilon(1e-9));
  CHECK(rows[2].kind == BoundKind::exact);

  // Reliability rows are the exact complements with flipped senses.
  std::vector<BoundRow> rrows = s.reliability_bounds(2);
  REQUIRE(rrows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rrows[i].value == 1.0 - rows[i].value);
    CHECK(rrows[i].t == rows[i].t);
  }
  CHECK(rrows[0].kind == BoundKind::lower);
  CHECK(rrows[1].kind == BoundKind::upper);
  CHECK(rrows[2].kind == BoundKind::exact);

  // In a cut system the generator exponents are the minimal cuts.
  CHECK(s.minimal_cuts(2) == std::vector<Exponents>{{0, 0, 2}, {0, 2, 0}, {2, 0, 0}});
  CHECK(s.minimal_paths(2) == std::vector<Exponents>{{1, 1, 1}});
}

TEST_CASE("reliability and unreliability are exact complements") {
  CoherentSystem s = series3();
  CoherentSystem p = parallel3();
  for (int j = 1; j <= 2; ++j) {
    CHECK(s.reliability(j) + s.unreliability(j) == 1.0);
    CHECK(p.reliability(j) + p.unreliability(j) == 1.0);
  }
}

TEST_CASE("route selection prefers fewer generators") {
  CoherentSystem s = series3();
  // One generator primal vs three dual: primal wins.
  CHECK(s.choose_route(1) == Route::primal);

  CoherentSystem p = parallel3();
  // Three generators primal vs one dual: dual wins.
  REQUIRE(p.boundary_dual_ideal(2).generator_count() == 1);
  CHECK(p.choose_route(2) == Route::dual);

  // Both routes must agree wherever the dual is admitted.
  for (int j = 1; j <= 2; ++j) {
    REQUIRE(p.dual_route_supported(j));
    CHECK(std::abs(p.reliability(j, Route::primal) - p.reliability(j, Route::dual)) <= 1e-12);
    CHECK(std::abs(s.reliability(j, Route::primal) - s.reliability(j, Route::dual)) <= 1e-12);
  }
}

TEST_CASE("dual route gate refuses large non-binary systems") {
  // 10 components with 3 levels each: ~1e6 states, beyond the oracle gate,
  // and not binary, so the dual route is not admitted.
  std::vector<std::vector<double>> rows(10, {0.9, 0.8, 0.7});
  CoherentSystem big = build_series(ProbabilityTable(rows));
  CHECK(big.state_count() > 1e5);
  CHECK_FALSE(big.dual_route_supported(1));
  CHECK_THROWS_AS(big.reliability(1, Route::dual), UnsupportedRouteError);
  CHECK(big.choose_route(1) == Route::primal);
  CHECK(big.reliability(1) == doctest::Approx(std::pow(0.9, 10)).epsilon(1e-9));

  // Binary systems of any size remain admitted.
  std::vector<std::vector<double>> brows(20, {0.9});
  CoherentSystem bin = build_series(ProbabilityTable(brows));
  CHECK(bin.state_count() > 1e5);
  CHECK(bin.dual_route_supported(1));
  CHECK(bin.reliability(1, Route::dual) == doctest::Approx(std::pow(0.9, 20)).epsilon(1e-12));
}

TEST_CASE("construction validates its inputs") {
  ProbabilityTable t({{0.9}, {0.8}});
  std::vector<MonomialIdeal> ideals{MonomialIdeal(2, {m({1, 1})})};
  CHECK_NOTHROW(CoherentSystem(SystemKind::path, Exponents{1, 1}, ideals, t));
  // caps/table mismatch
  CHECK_THROWS_AS(CoherentSystem(SystemKind::path, Exponents{1, 2}, ideals, t),
                  PreconditionError);
  // caps below 1
  CHECK_THROWS_AS(CoherentSystem(SystemKind::path, Exponents{1, 0}, ideals, t),
                  PreconditionError);
  // generator exceeding its cap
  std::vector<MonomialIdeal> high{MonomialIdeal(2, {m({2, 1})})};
  CHECK_THROWS_AS(CoherentSystem(SystemKind::path, Exponents{1, 1}, high, t), PreconditionError);
  // ideal in the wrong number of variables
  std::vector<MonomialIdeal> wrong{MonomialIdeal(3, {m({1, 1, 1})})};
  CHECK_THROWS_AS(CoherentSystem(SystemKind::path, Exponents{1, 1}, wrong, t), PreconditionError);
  // no levels
  CHECK_THROWS_AS(CoherentSystem(SystemKind::path, Exponents{1, 1}, {}, t), PreconditionError);
}

TEST_CASE("degenerate level ideals") {
  ProbabilityTable t({{0.9}, {0.8}});
  // Zero ideal: nothing works at this level.
  CoherentSystem none(SystemKind::path, Exponents{1, 1}, {MonomialIdeal(2)}, t);
  CHECK(none.reliability(1) == 0.0);
  CHECK(none.unreliability(1) == 1.0);
  CHECK(none.minimal_paths(1).empty());
  CHECK(none.minimal_cuts(1) == std::vector<Exponents>{{1, 1}});
  CHECK(none.choose_route(1) == Route::primal);

  // Unit ideal: every state works.
  CoherentSystem all(SystemKind::path, Exponents{1, 1},
                     {MonomialIdeal(2, {Monomial::one(2)})}, t);
  CHECK(all.reliability(1) == 1.0);
  CHECK(all.unreliability(1) == 0.0);
  CHECK(all.minimal_cuts(1).empty());
  CHECK(all.choose_route(1) == Route::primal);
}

TEST_CASE("nested systems have monotone level reliabilities") {
  CoherentSystem s = series3();
  CHECK(s.reliability(1) >= s.reliability(2));

  std::mt19937_64 rng(83);
  for (int rep = 0; rep < 30; ++rep) {
    CoherentSystem sys = random_nested_system(3, 3, rng);
    CHECK(sys.is_nested());
    double prev = evaluate(sys.numerator(1, Route::primal), sys.table());
    for (int j = 2; j <= sys.levels(); ++j) {
      double cur = evaluate(sys.numerator(j, Route::primal), sys.table());
      CHECK(cur <= prev + 1e-12);  // ideal measure shrinks with the level
      prev = cur;
    }
  }
}

TEST_CASE("single-path and cut-product bounds stay below the reliability") {
  CoherentSystem s = series3();
  // A series system is its own best single path, and its cut product is
  // exact because the components are independent.
  CHECK(s.gn_max_min_path_bound(1) == doctest::Approx(0.54).epsilon(1e-9));
  CHECK(s.gn_coproduct_min_cuts_bound(1) == doctest::Approx(0.54).epsilon(1e-9));

  CoherentSystem p = parallel3();
  CHECK(p.gn_max_min_path_bound(2) == doctest::Approx(0.54).epsilon(1e-9));
  CHECK(p.gn_coproduct_min_cuts_bound(2) == doctest::Approx(0.54).epsilon(1e-9));

  std::mt19937_64 rng(89);
  for (int rep = 0; rep < 40; ++rep) {
    CoherentSystem sys = random_nested_system(3, 2, rng);
    for (int j = 1; j <= sys.levels(); ++j) {
      double r = sys.reliability(j);
      CHECK(sys.gn_max_min_path_bound(j) <= r + 1e-12);
      CHECK(sys.gn_coproduct_min_cuts_bound(j) <= r + 1e-12);
    }
  }
}

TEST_CASE("copies drop caches but answer identically") {
  CoherentSystem s = parallel3();
  (void)s.reliability(2);
  CoherentSystem copy(s);
  CHECK(copy.reliability(2) == s.reliability(2));
  CHECK(copy.choose_route(2) == s.choose_route(2));
}

TEST_CASE("concurrent queries agree") {
  CoherentSystem s = parallel3();
  std::vector<double> r(8, -1.0);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&s, &r, i] {
      double v = s.reliability(1 + i % 2);
      (void)s.unreliability_bounds(2);
      (void)s.minimal_cuts(1);
      r[static_cast<std::size_t>(i)] = v;
    });
  for (auto& t : threads) t.join();
  for (int i = 0; i < 8; ++i) CHECK(r[static_cast<std::size_t>(i)] == s.reliability(1 + i % 2));
}

TEST_CASE("paths and cuts against the exhaustive complement") {
  // On random small systems every state is either in the ideal or dominated
  // by a minimal cut state, never both.  This ties path/cut semantics to
  // membership for both kinds.
  std::mt19937_64 rng(97);
  for (int rep = 0; rep < 25; ++rep) {
    CoherentSystem sys = random_nested_system(3, 2, rng);
    for (int j = 1; j <= sys.levels(); ++j) {
      const MonomialIdeal& I = sys.level_ideal(j);
      std::vector<Exponents> cuts =
          sys.kind() == SystemKind::path ? sys.minimal_cuts(j) : sys.minimal_paths(j);
      Exponents s(3, 0);
      while (true) {
        bool inside = I.contains(s);
        bool dominated = false;
        for (const auto& b : cuts) {
          bool le = true;
          for (int i = 0; i < 3; ++i)
            le = le && s[static_cast<std::size_t>(i)] <= b[static_cast<std::size_t>(i)];
          dominated = dominated || le;
        }
        CHECK(inside != dominated);
        int i = 0;
        while (i < 3 && s[static_cast<std::size_t>(i)] == 2) s[static_cast<std::size_t>(i++)] = 0;
        if (i == 3) break;
        ++s[static_cast<std::size_t>(i)];
      }
    }
  }
}
