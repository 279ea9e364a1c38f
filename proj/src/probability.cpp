#include "relalg/probability.hpp"

#include <string>

#include "relalg/errors.hpp"

namespace relalg {

ProbabilityTable::ProbabilityTable(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw SchemaError("probability table needs at least one component row");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& row = rows_[i];
    if (row.empty())
      throw SchemaError("probability row " + std::to_string(i + 1) + " is empty");
    double prev = 1.0;
    for (std::size_t l = 0; l < row.size(); ++l) {
      double p = row[l];
      if (p < 0.0 || p > 1.0)
        throw SchemaError("probability row " + std::to_string(i + 1) + ", level " +
                          std::to_string(l + 1) + " is outside [0,1]");
      if (p > prev)
        throw SchemaError("probability row " + std::to_string(i + 1) +
                          " is not non-increasing at level " + std::to_string(l + 1));
      prev = p;
    }
  }
}

Exponents ProbabilityTable::caps() const {
  Exponents c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = static_cast<int>(rows_[i].size());
  return c;
}

double ProbabilityTable::at_least(int i, int level) const {
  if (i < 0 || i >= components()) throw PreconditionError("at_least: component index out of range");
  const auto& row = rows_[static_cast<std::size_t>(i)];
  if (level < 0 || level > static_cast<int>(row.size()) + 1)
    throw PreconditionError("at_least: level out of range for component " + std::to_string(i + 1));
  if (level == 0) return 1.0;
  if (level == static_cast<int>(row.size()) + 1) return 0.0;
  return row[static_cast<std::size_t>(level - 1)];
}

namespace {

void require_within_caps(const Monomial& mu, const ProbabilityTable& table, const char* op) {
  if (mu.nvars() != table.components())
    throw PreconditionError(std::string(op) + ": monomial length does not match component count");
  for (int i = 0; i < mu.nvars(); ++i)
    if (mu[i] > table.cap(i))
      throw PreconditionError(std::string(op) + ": exponent of x" + std::to_string(i + 1) +
                              " exceeds the component cap");
}

}  // namespace

double pr(const Monomial& mu, const ProbabilityTable& table) {
  require_within_caps(mu, table, "pr");
  double v = 1.0;
  for (int i = 0; i < mu.nvars(); ++i) v *= table.at_least(i, mu[i]);
  return v;
}

double pr_bar(const Monomial& mu, const ProbabilityTable& table) {
  require_within_caps(mu, table, "pr_bar");
  double v = 1.0;
  for (int i = 0; i < mu.nvars(); ++i) v *= 1.0 - table.at_least(i, mu[i] + 1);
  return v;
}

double evaluate(const HilbertNumerator& hn, const ProbabilityTable& table) {
  double v = 0.0;
  for (const SignedSummand& s : hn.summands) v += s.sign() * pr(s.multidegree, table);
  return v;
}

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::upper: return "upper";
    case BoundKind::lower: return "lower";
    case BoundKind::exact: return "exact";
  }
  return "?";
}

std::vector<BoundRow> evaluate_bounds(const HilbertNumerator& hn, const ProbabilityTable& table) {
  std::vector<BoundRow> rows;
  int maxdim = hn.max_dimension();
  rows.reserve(static_cast<std::size_t>(maxdim));
  // Evaluating each truncation in summand order makes the final row
  // bit-identical to evaluate(hn).
  for (int t = 1; t <= maxdim; ++t)
    rows.push_back(
        {t, evaluate(truncate(hn, t), table), (t % 2 == 1) ? BoundKind::upper : BoundKind::lower});
  if (!rows.empty()) rows.back().kind = BoundKind::exact;  // nothing was cut
  return rows;
}

}  // namespace relalg
