#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "relalg/ideal.hpp"
#include "relalg/monomial.hpp"

namespace relalg {

enum class NumeratorSource { taylor, mayer_vietoris };

// One term of a Hilbert series numerator.  The sign is determined by the
// homological dimension: (-1)^(dimension+1), so dimension 1 contributes +1.
struct SignedSummand {
  Monomial multidegree;
  int dimension = 1;

  int sign() const { return (dimension % 2 == 1) ? +1 : -1; }

  friend bool operator==(const SignedSummand&, const SignedSummand&) = default;
};

// Numerator of the Hilbert series of a monomial ideal, as a signed multiset
// of multidegrees.  Summands are accumulated without cancellation; use
// cancelled_form for the canonical polynomial.
struct HilbertNumerator {
  std::vector<SignedSummand> summands;
  NumeratorSource source = NumeratorSource::taylor;

  std::size_t size() const { return summands.size(); }
  int max_dimension() const;
};

// Inclusion-exclusion numerator: one summand per non-empty generator subset,
// with multidegree the lcm of the subset and dimension its cardinality.
// Refuses to run for more than max_generators generators (2^r - 1 summands).
HilbertNumerator taylor_numerator(const MonomialIdeal& ideal, int max_generators = 25);

// Pivot selection for the Mayer-Vietoris recursion.  last_in_order is the
// default and the canonical policy; the alternatives exist to experiment
// with tree sizes and must agree after cancellation.
enum class PivotPolicy { last_in_order, max_support, random_seeded };

// Mayer-Vietoris numerator via the recursion
//   HN(I) = HN(I') + x^m - x^m * HN(I' : m)
// where m is the pivot and I' the remaining generators.  Summands reached
// through k nested colon branches carry dimension k+1.  Usually far fewer
// summands than Taylor, never more.
HilbertNumerator mayer_vietoris_numerator(const MonomialIdeal& ideal,
                                          PivotPolicy policy = PivotPolicy::last_in_order,
                                          std::uint64_t seed = 0);

// Keeps summands of dimension <= t.
HilbertNumerator truncate(const HilbertNumerator& hn, int t);

// Canonical cancelled polynomial: multidegree -> integer coefficient, zeros
// dropped.  Taylor and Mayer-Vietoris numerators of the same ideal agree
// here regardless of pivot policy.
std::map<Monomial, long long> cancelled_form(const HilbertNumerator& hn);

namespace detail {
// Generic (unpacked) recursion, exposed so tests can pin the word-packed
// fast paths against it.
HilbertNumerator mayer_vietoris_generic(const MonomialIdeal& ideal, PivotPolicy policy,
                                        std::uint64_t seed);
}  // namespace detail

}  // namespace relalg
