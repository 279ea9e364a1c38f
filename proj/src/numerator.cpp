#include "relalg/numerator.hpp"

#include <algorithm>
#include <cassert>

#include "detail/kernels.hpp"
#include "relalg/errors.hpp"

namespace relalg {

namespace {

// SplitMix64; used only by the random_seeded pivot policy so that pivot
// sequences are identical across kernels and platforms.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

template <class K>
std::size_t pick_pivot(const K&, const std::vector<typename K::Word>& gens, PivotPolicy policy,
                       SplitMix64& rng) {
  switch (policy) {
    case PivotPolicy::last_in_order:
      return gens.size() - 1;
    case PivotPolicy::max_support: {
      std::size_t best = 0;
      int best_support = -1;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        int s = K::support(gens[i]);
        if (s >= best_support) {  // ties resolve to the last in canonical order
          best_support = s;
          best = i;
        }
      }
      return best;
    }
    case PivotPolicy::random_seeded:
      return static_cast<std::size_t>(rng.next() % gens.size());
  }
  return gens.size() - 1;
}

// Recursive core.  `mult` is the product of the pivots of the colon branches
// taken so far and `depth` their count; a summand emitted from a node at
// depth k gets dimension k+1.  Generators arrive minimal and sorted.
template <class K>
void mvt_node(const K& kernel, std::vector<typename K::Word> gens, typename K::Word mult,
              int depth, PivotPolicy policy, SplitMix64& rng,
              std::vector<std::pair<typename K::Word, int>>& out) {
  while (true) {
    if (gens.size() == 1) {
      out.emplace_back(K::mul(mult, gens.front()), depth + 1);
      return;
    }
    std::size_t pivot_idx = pick_pivot(kernel, gens, policy, rng);
    typename K::Word m = gens[pivot_idx];
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pivot_idx));

    // x^m term of this node.
    typename K::Word shifted = K::mul(mult, m);
    out.emplace_back(shifted, depth + 1);

    // Subtracted branch: x^m * HN(I' : m), one dimension deeper.
    std::vector<typename K::Word> quo;
    quo.reserve(gens.size());
    for (const auto& g : gens) quo.push_back(K::colon_q(g, m));
    quo = detail::minimal_words<K>(std::move(quo));
    mvt_node(kernel, std::move(quo), shifted, depth + 1, policy, rng, out);

    // Continue with HN(I') in this frame (tail recursion unrolled).
  }
}

template <class K>
HilbertNumerator mvt_with_kernel(const K& kernel, const MonomialIdeal& ideal, PivotPolicy policy,
                                 std::uint64_t seed) {
  HilbertNumerator hn;
  hn.source = NumeratorSource::mayer_vietoris;
  if (ideal.is_zero()) return hn;

  std::vector<typename K::Word> gens;
  gens.reserve(ideal.generator_count());
  for (const Monomial& g : ideal.generators()) gens.push_back(kernel.pack(g));
  std::sort(gens.begin(), gens.end());

  SplitMix64 rng{seed};
  std::vector<std::pair<typename K::Word, int>> raw;
  mvt_node(kernel, std::move(gens), kernel.pack(Monomial::one(ideal.nvars())), 0, policy, rng, raw);

  hn.summands.reserve(raw.size());
  for (const auto& [w, dim] : raw) hn.summands.push_back({kernel.unpack(w), dim});
  return hn;
}

void taylor_rec(const std::vector<Monomial>& gens, std::size_t idx, const Monomial& acc, int count,
                std::vector<SignedSummand>& out) {
  if (idx == gens.size()) {
    if (count > 0) out.push_back({acc, count});
    return;
  }
  taylor_rec(gens, idx + 1, acc, count, out);
  taylor_rec(gens, idx + 1, count == 0 ? gens[idx] : lcm(acc, gens[idx]), count + 1, out);
}

}  // namespace

int HilbertNumerator::max_dimension() const {
  int d = 0;
  for (const SignedSummand& s : summands) d = std::max(d, s.dimension);
  return d;
}

HilbertNumerator taylor_numerator(const MonomialIdeal& ideal, int max_generators) {
  HilbertNumerator hn;
  hn.source = NumeratorSource::taylor;
  if (ideal.is_zero()) return hn;
  int r = static_cast<int>(ideal.generator_count());
  if (r > max_generators) {
    throw ResourceLimitError("taylor numerator refused: " + std::to_string(r) +
                             " generators exceed the guard of " + std::to_string(max_generators) +
                             " (2^" + std::to_string(r) + " - 1 summands)");
  }
  hn.summands.reserve((std::size_t(1) << r) - 1);
  taylor_rec(ideal.generators(), 0, Monomial::one(ideal.nvars()), 0, hn.summands);
  return hn;
}

HilbertNumerator mayer_vietoris_numerator(const MonomialIdeal& ideal, PivotPolicy policy,
                                          std::uint64_t seed) {
  detail::MaskKernel mask{ideal.nvars()};
  if (mask.applicable(ideal.generators())) return mvt_with_kernel(mask, ideal, policy, seed);
  detail::NibbleKernel nib{ideal.nvars()};
  if (nib.applicable(ideal.generators())) return mvt_with_kernel(nib, ideal, policy, seed);
  detail::GenericKernel gen{ideal.nvars()};
  return mvt_with_kernel(gen, ideal, policy, seed);
}

HilbertNumerator truncate(const HilbertNumerator& hn, int t) {
  HilbertNumerator out;
  out.source = hn.source;
  for (const SignedSummand& s : hn.summands)
    if (s.dimension <= t) out.summands.push_back(s);
  return out;
}

std::map<Monomial, long long> cancelled_form(const HilbertNumerator& hn) {
  std::map<Monomial, long long> poly;
  for (const SignedSummand& s : hn.summands) {
    long long& c = poly[s.multidegree];
    c += s.sign();
    if (c == 0) poly.erase(s.multidegree);
  }
  return poly;
}

namespace detail {
HilbertNumerator mayer_vietoris_generic(const MonomialIdeal& ideal, PivotPolicy policy,
                                        std::uint64_t seed) {
  GenericKernel gen{ideal.nvars()};
  return mvt_with_kernel(gen, ideal, policy, seed);
}
}  // namespace detail

}  // namespace relalg
