#pragma once

#include <vector>

#include "relalg/monomial.hpp"
#include "relalg/numerator.hpp"

namespace relalg {

// Per-component level probabilities.  Row i holds p_{i,1} .. p_{i,M_i} where
// p_{i,l} is the probability that component i is at level l or above.  Rows
// must be non-increasing with entries in [0,1]; p_{i,0} = 1 and
// p_{i,M_i+1} = 0 are implicit.
class ProbabilityTable {
 public:
  explicit ProbabilityTable(std::vector<std::vector<double>> rows);

  int components() const { return static_cast<int>(rows_.size()); }
  int cap(int i) const { return static_cast<int>(rows_[static_cast<std::size_t>(i)].size()); }
  Exponents caps() const;

  // P(component i at level >= l); valid for 0 <= l <= cap(i) + 1.
  double at_least(int i, int level) const;

  // P(component i exactly at level l) = p_{i,l} - p_{i,l+1}.
  double level_mass(int i, int level) const { return at_least(i, level) - at_least(i, level + 1); }

  const std::vector<std::vector<double>>& rows() const { return rows_; }

  friend bool operator==(const ProbabilityTable&, const ProbabilityTable&) = default;

 private:
  std::vector<std::vector<double>> rows_;
};

// pr(x^mu) = prod_i p_{i, mu_i}: probability of the state upset {s >= mu}.
double pr(const Monomial& mu, const ProbabilityTable& table);

// pr_bar(x^mu) = prod_i (1 - p_{i, mu_i + 1}): probability of the downset
// {s <= mu}.
double pr_bar(const Monomial& mu, const ProbabilityTable& table);

// Substitutes pr into a Hilbert series numerator: sum of sign * pr(summand).
// For the level ideal of a system this is the probability that the state
// lies in the ideal.
double evaluate(const HilbertNumerator& hn, const ProbabilityTable& table);

enum class BoundKind { upper, lower, exact };

struct BoundRow {
  int t = 0;
  double value = 0.0;
  BoundKind kind = BoundKind::upper;

  friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

const char* to_string(BoundKind k);

// Truncation (Bonferroni-style) bounds: row t evaluates the numerator cut at
// dimension t; odd t overshoots, even t undershoots, and the final row equals
// the full evaluation.
std::vector<BoundRow> evaluate_bounds(const HilbertNumerator& hn, const ProbabilityTable& table);

}  // namespace relalg
