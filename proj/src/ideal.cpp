#include "relalg/ideal.hpp"

#include <algorithm>

#include "relalg/errors.hpp"

namespace relalg {

namespace {

void require_nvars(int nvars, const Monomial& m, const char* op) {
  if (m.nvars() != nvars) {
    throw PreconditionError(std::string(op) + ": monomial has " + std::to_string(m.nvars()) +
                            " variables, ideal has " + std::to_string(nvars));
  }
}

// Keeps only divisibility-minimal elements of a deduplicated list sorted by
// total degree: a proper divisor always has strictly smaller degree, so each
// candidate only needs to be tested against already accepted monomials.
std::vector<Monomial> minimal_elements(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Monomial& a, const Monomial& b) { return a.total_degree() < b.total_degree(); });
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (const Monomial& g : gens) {
    bool dominated = false;
    for (const Monomial& k : kept) {
      if (divides(k, g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw PreconditionError("ideal needs at least one variable");
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : MonomialIdeal(nvars) {
  for (const Monomial& g : gens) require_nvars(nvars, g, "ideal construction");
  gens_ = minimal_elements(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_nvars(nvars_, m, "contains");
  return contains(m.exponents());
}

bool MonomialIdeal::contains(const Exponents& state) const {
  if (static_cast<int>(state.size()) != nvars_)
    throw PreconditionError("contains: state length does not match variable count");
  for (const Monomial& g : gens_) {
    bool div = true;
    for (int i = 0; i < nvars_; ++i) {
      if (g[i] > state[static_cast<std::size_t>(i)]) {
        div = false;
        break;
      }
    }
    if (div) return true;
  }
  return false;
}

MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens) {
  return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  require_nvars(ideal.nvars(), m, "colon");
  if (ideal.is_zero()) return MonomialIdeal(ideal.nvars());
  std::vector<Monomial> gens;
  gens.reserve(ideal.generator_count());
  for (const Monomial& g : ideal.generators()) gens.push_back(colon_quotient(g, m));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw PreconditionError("intersect: variable counts differ");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal(a.nvars());
  std::vector<Monomial> gens;
  gens.reserve(a.generator_count() * b.generator_count());
  for (const Monomial& g : a.generators())
    for (const Monomial& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

Monomial lcm_of_generators(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw PreconditionError("lcm_of_generators: zero ideal");
  Monomial acc = ideal.generators().front();
  for (std::size_t i = 1; i < ideal.generator_count(); ++i) acc = lcm(acc, ideal.generators()[i]);
  return acc;
}

}  // namespace relalg
