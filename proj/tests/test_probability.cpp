#include "relalg/probability.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "relalg/errors.hpp"
#include "relalg/ideal.hpp"
#include "relalg/monomial.hpp"
#include "relalg/numerator.hpp"

using namespace relalg;

namespace {

Monomial m(Exponents e) { return Monomial(std::move(e)); }

// Component survival rows of the three-component series example.
ProbabilityTable series_table() { return ProbabilityTable({{0.8, 0.75}, {0.9, 0.8}, {0.75, 0.7}}); }

// Failure-level rows of the three-component parallel example.
ProbabilityTable parallel_table() {
  return ProbabilityTable({{0.25, 0.2}, {0.2, 0.1}, {0.3, 0.25}});
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

}  // namespace

TEST_CASE("table validation") {
  using Rows = std::vector<std::vector<double>>;
  CHECK_THROWS_AS(ProbabilityTable(Rows{{0.5, 0.6}}), SchemaError);   // rising row
  CHECK_THROWS_AS(ProbabilityTable(Rows{{1.2}}), SchemaError);        // above 1
  CHECK_THROWS_AS(ProbabilityTable(Rows{{0.5, -0.1}}), SchemaError);  // below 0
  CHECK_THROWS_AS(ProbabilityTable(Rows{{0.5}, {}}), SchemaError);    // empty row
  CHECK_NOTHROW(ProbabilityTable(Rows{{0.5, 0.5}, {1.0}}));  // ties and ragged rows are fine
}

TEST_CASE("at_least covers the implicit levels") {
  ProbabilityTable t = series_table();
  CHECK(t.components() == 3);
  CHECK(t.cap(0) == 2);
  CHECK(t.caps() == Exponents{2, 2, 2});
  CHECK(t.at_least(0, 0) == 1.0);
  CHECK(t.at_least(0, 1) == 0.8);
  CHECK(t.at_least(0, 2) == 0.75);
  CHECK(t.at_least(0, 3) == 0.0);
  CHECK_THROWS_AS(t.at_least(0, 4), PreconditionError);
  CHECK_THROWS_AS(t.at_least(3, 0), PreconditionError);

  // Exact level masses partition the component's states.
  std::mt19937_64 rng(5);
  ProbabilityTable r = random_table(4, 3, rng);
  for (int i = 0; i < 4; ++i) {
    double total = 0.0;
    for (int l = 0; l <= r.cap(i); ++l) total += r.level_mass(i, l);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("pr and pr_bar on the worked examples") {
  ProbabilityTable t = series_table();
  CHECK(pr(m({1, 1, 1}), t) == doctest::Approx(0.54).epsilon(1e-12));
  CHECK(pr(m({2, 2, 2}), t) == doctest::Approx(0.42).epsilon(1e-12));
  CHECK(pr(Monomial::one(3), t) == 1.0);

  // pr_bar of a state is the chance every component is at that level or below.
  CHECK(pr_bar(m({2, 2, 0}), t) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(pr_bar(m({2, 0, 2}), t) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(pr_bar(m({0, 2, 2}), t) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(pr_bar(m({2, 2, 2}), t) == 1.0);

  CHECK_THROWS_AS(pr(m({3, 0, 0}), t), PreconditionError);  // exponent above cap
  CHECK_THROWS_AS(pr(m({1, 1}), t), PreconditionError);
}

TEST_CASE("pr is antitone in the exponents") {
  std::mt19937_64 rng(13);
  ProbabilityTable t = random_table(3, 2, rng);
  std::uniform_int_distribution<int> exp(0, 2);
  for (int rep = 0; rep < 200; ++rep) {
    Exponents lo(3), hi(3);
    for (int i = 0; i < 3; ++i) {
      lo[static_cast<std::size_t>(i)] = exp(rng);
      hi[static_cast<std::size_t>(i)] = exp(rng);
      if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)])
        std::swap(lo[static_cast<std::size_t>(i)], hi[static_cast<std::size_t>(i)]);
    }
    CHECK(pr(Monomial(lo), t) >= pr(Monomial(hi), t));
  }
}

TEST_CASE("numerator evaluation reproduces the parallel example") {
  MonomialIdeal I(3, {m({2, 0, 0}), m({0, 2, 0}), m({0, 0, 2})});
  ProbabilityTable t = parallel_table();
  CHECK(evaluate(taylor_numerator(I), t) == doctest::Approx(0.46).epsilon(1e-9));
  CHECK(evaluate(mayer_vietoris_numerator(I), t) == doctest::Approx(0.46).epsilon(1e-9));
  CHECK(evaluate(HilbertNumerator{}, t) == 0.0);
}

TEST_CASE("evaluation is invariant under the numerator source") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> gens(1, 6), exp(0, 2);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Monomial> g;
    for (int k = gens(rng); k > 0; --k) {
      Exponents e(3);
      for (auto& x : e) x = exp(rng);
      g.emplace_back(std::move(e));
    }
    MonomialIdeal I(3, std::move(g));
    ProbabilityTable t = random_table(3, 2, rng);
    double a = evaluate(taylor_numerator(I), t);
    double b = evaluate(mayer_vietoris_numerator(I), t);
    CHECK(std::abs(a - b) <= 1e-12);
  }
}

TEST_CASE("truncation bounds alternate and end exactly") {
  MonomialIdeal I(3, {m({2, 0, 0}), m({0, 2, 0}), m({0, 0, 2})});
  ProbabilityTable t = parallel_table();
  HilbertNumerator hn = mayer_vietoris_numerator(I);
  std::vector<BoundRow> rows = evaluate_bounds(hn, t);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].t == 1);
  CHECK(rows[0].value == doctest::Approx(0.55).epsilon(1e-9));
  CHECK(rows[0].kind == BoundKind::upper);
  CHECK(rows[1].t == 2);
  CHECK(rows[1].value == doctest::Approx(0.455).epsilon(1e-9));
  CHECK(rows[1].kind == BoundKind::lower);
  CHECK(rows[2].t == 3);
  CHECK(rows[2].value == doctest::Approx(0.46).epsilon(1e-9));
  CHECK(rows[2].kind == BoundKind::exact);

  // The last row is bit-identical to the full evaluation.
  CHECK(rows.back().value == evaluate(hn, t));
}

TEST_CASE("bounds bracket the exact value with the right parity") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> gens(1, 7), exp(0, 2);
  for (int rep = 0; rep < 60; ++rep) {
    std::vector<Monomial> g;
    for (int k = gens(rng); k > 0; --k) {
      Exponents e(4);
      for (auto& x : e) x = exp(rng);
      g.emplace_back(std::move(e));
    }
    MonomialIdeal I(4, std::move(g));
    ProbabilityTable t = random_table(4, 2, rng);
    HilbertNumerator hn = taylor_numerator(I);
    double exact = evaluate(hn, t);
    for (const BoundRow& row : evaluate_bounds(hn, t)) {
      if (row.kind == BoundKind::upper) CHECK(row.value >= exact - 1e-12);
      if (row.kind == BoundKind::lower) CHECK(row.value <= exact + 1e-12);
      if (row.kind == BoundKind::exact) CHECK(row.value == exact);
    }
  }
}

TEST_CASE("bound kind names") {
  CHECK(std::string(to_string(BoundKind::upper)) == "upper");
  CHECK(std::string(to_string(BoundKind::lower)) == "lower");
  CHECK(std::string(to_string(BoundKind::exact)) == "exact");
}
