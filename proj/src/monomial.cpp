#include "relalg/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

#include "relalg/errors.hpp"

namespace relalg {

namespace {

void require_same_length(const Monomial& a, const Monomial& b, const char* op) {
  if (a.nvars() != b.nvars()) {
    throw PreconditionError(std::string(op) + ": monomials of different lengths (" +
                            std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + ")");
  }
}

}  // namespace

Monomial::Monomial(Exponents e) : exp_(std::move(e)) {
  for (int v : exp_) {
    if (v < 0) throw PreconditionError("monomial exponent must be non-negative");
  }
}

Monomial Monomial::one(int nvars) { return Monomial(Exponents(static_cast<std::size_t>(nvars), 0)); }

int Monomial::total_degree() const {
  int d = 0;
  for (int v : exp_) d += v;
  return d;
}

int Monomial::support_size() const {
  int s = 0;
  for (int v : exp_)
    if (v > 0) ++s;
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int v) { return v == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int v) { return v <= 1; });
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < nvars(); ++i) {
    int e = exp_[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

bool lex_less(const Monomial& a, const Monomial& b) {
  require_same_length(a, b, "lex_less");
  return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                      b.exponents().begin(), b.exponents().end());
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_length(a, b, "divides");
  for (int i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_length(a, b, "lcm");
  Exponents e(a.exponents());
  for (int i = 0; i < a.nvars(); ++i) e[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial product(const Monomial& a, const Monomial& b) {
  require_same_length(a, b, "product");
  Exponents e(static_cast<std::size_t>(a.nvars()));
  for (int i = 0; i < a.nvars(); ++i) {
    long long s = static_cast<long long>(a[i]) + b[i];
    assert(s <= INT32_MAX && "exponent overflow");
    e[static_cast<std::size_t>(i)] = static_cast<int>(s);
  }
  return Monomial(std::move(e));
}

Monomial colon_quotient(const Monomial& g, const Monomial& m) {
  require_same_length(g, m, "colon_quotient");
  Exponents e(static_cast<std::size_t>(g.nvars()));
  for (int i = 0; i < g.nvars(); ++i) e[static_cast<std::size_t>(i)] = std::max(g[i] - m[i], 0);
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  require_same_length(a, b, "quotient");
  Exponents e(static_cast<std::size_t>(a.nvars()));
  for (int i = 0; i < a.nvars(); ++i) {
    if (b[i] > a[i]) throw PreconditionError("quotient: divisor does not divide dividend");
    e[static_cast<std::size_t>(i)] = a[i] - b[i];
  }
  return Monomial(std::move(e));
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

}  // namespace relalg
