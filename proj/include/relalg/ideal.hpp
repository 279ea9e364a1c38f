#pragma once

#include <cstddef>
#include <vector>

#include "relalg/monomial.hpp"

namespace relalg {

// A monomial ideal represented by its unique minimal generating set, kept
// lexicographically sorted.  Two ideals are equal iff their generator lists
// are equal.  The zero ideal has no generators; the unit ideal has the single
// all-zeros generator and absorbs everything else on minimalization.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars);  // zero ideal
  MonomialIdeal(int nvars, std::vector<Monomial> gens);  // minimalizes + sorts

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const;
  bool contains(const Exponents& state) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;
};

// Drops duplicates and every monomial strictly divisible by another one.
MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens);

// (I : m).  Zero ideal input gives the zero ideal; if m is in I the result
// is the unit ideal.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

// I \cap J via pairwise lcms.  Either input zero gives the zero ideal.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// lcm of all generators; requires a non-zero ideal.
Monomial lcm_of_generators(const MonomialIdeal& ideal);

}  // namespace relalg
