#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relalg {

// Exponent vector; index i is the exponent of variable x_{i+1}.
using Exponents = std::vector<int>;

// A monomial in a fixed number of variables, stored as its exponent vector.
// Exponents are machine ints; overflow is unreachable for the intended
// state-space sizes and is asserted, not handled.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Exponents e);

  static Monomial one(int nvars);

  int nvars() const { return static_cast<int>(exp_.size()); }
  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  const Exponents& exponents() const { return exp_; }

  int total_degree() const;
  int support_size() const;  // number of variables with positive exponent
  bool is_one() const;
  bool is_squarefree() const;

  // Rendering like "x1^2*x3"; the unit monomial renders as "1".
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Exponents exp_;
};

// Lexicographic order on exponent vectors; this is the canonical generator
// order used everywhere (sorting, pivot selection, output).
bool lex_less(const Monomial& a, const Monomial& b);
inline bool operator<(const Monomial& a, const Monomial& b) { return lex_less(a, b); }

bool divides(const Monomial& a, const Monomial& b);  // a | b, componentwise <=
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);

// lcm(g, m) / m, i.e. max(g_i - m_i, 0) componentwise.
Monomial colon_quotient(const Monomial& g, const Monomial& m);

// a / b with b | a required.
Monomial quotient(const Monomial& a, const Monomial& b);

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace relalg
