#pragma once

// Internal word-packed monomial kernels.  The recursion in the resolution
// module and the intersections behind the boundary dual are hot paths for
// network and k-out-of-n ideals, so monomials are packed into single 64-bit
// words whenever the variable count and exponents allow it.  All kernels
// implement the same canonical (lexicographic) order, so results are
// identical to the generic vector<int> path.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "relalg/monomial.hpp"

namespace relalg::detail {

// ---------------------------------------------------------------------------
// Squarefree kernel: one bit per variable, n <= 64.
// Variable i sits at bit (63 - i) so that unsigned comparison of words is
// exactly lexicographic comparison of exponent vectors.
// ---------------------------------------------------------------------------
struct MaskKernel {
  using Word = std::uint64_t;

  int nvars = 0;

  bool applicable(const std::vector<Monomial>& gens) const;
  Word pack(const Monomial& m) const;
  Monomial unpack(Word w) const;

  static bool divides(Word a, Word b) { return (a & ~b) == 0; }
  static Word lcm(Word a, Word b) { return a | b; }
  // max(g - m, 0); for squarefree words this is set difference.
  static Word colon_q(Word g, Word m) { return g & ~m; }
  // multiplier accumulation: supports are disjoint by construction.
  static Word mul(Word a, Word b) { return a | b; }
  static int support(Word w) { return std::popcount(w); }
};

// ---------------------------------------------------------------------------
// Nibble kernel: 4 bits per variable, n <= 16, all exponents <= 7.
// Variable i sits at nibble (15 - i), again making word order lexicographic.
// The bound of 7 keeps the high bit of every nibble free for the SWAR
// borrow trick below.
// ---------------------------------------------------------------------------
struct NibbleKernel {
  using Word = std::uint64_t;

  static constexpr Word kHigh = 0x8888888888888888ULL;

  int nvars = 0;

  bool applicable(const std::vector<Monomial>& gens) const;
  Word pack(const Monomial& m) const;
  Monomial unpack(Word w) const;

  // a | b componentwise iff no nibble of (b - a) borrows.
  static bool divides(Word a, Word b) { return (((b | kHigh) - a) & kHigh) == kHigh; }

  static Word lcm(Word a, Word b) {
    Word ge = ((b | kHigh) - a) & kHigh;       // bit set where b >= a
    Word sel = (ge >> 3) * 0xFULL;             // 0xF nibbles where b wins
    return (b & sel) | (a & ~sel);
  }

  // max(g - m, 0) per nibble.
  static Word colon_q(Word g, Word m) {
    Word d = (g | kHigh) - m;
    Word ge = d & kHigh;                       // bit set where g >= m
    Word sel = (ge >> 3) * 0xFULL;
    return (d & ~kHigh) & sel;
  }

  // Plain addition: along the recursion the running product never exceeds
  // the lcm of the original generators, so nibbles cannot overflow.
  static Word mul(Word a, Word b) { return a + b; }

  static int support(Word w) {
    // count non-zero nibbles
    Word nz = (w | (w >> 1) | (w >> 2) | (w >> 3)) & 0x1111111111111111ULL;
    return std::popcount(nz);
  }
};

// ---------------------------------------------------------------------------
// Generic kernel over full exponent vectors; always applicable.
// ---------------------------------------------------------------------------
struct GenericKernel {
  using Word = Monomial;

  int nvars = 0;

  bool applicable(const std::vector<Monomial>&) const { return true; }
  Word pack(const Monomial& m) const { return m; }
  Monomial unpack(const Word& w) const { return w; }

  static bool divides(const Word& a, const Word& b) { return relalg::divides(a, b); }
  static Word lcm(const Word& a, const Word& b) { return relalg::lcm(a, b); }
  static Word colon_q(const Word& g, const Word& m) { return relalg::colon_quotient(g, m); }
  static Word mul(const Word& a, const Word& b) { return relalg::product(a, b); }
  static int support(const Word& w) { return w.support_size(); }
};

// Deduplicates and keeps divisibility-minimal words, sorted canonically.
// The divisibility relation comes from the kernel K, not from the word type,
// so this works for mask, nibble and generic words alike.
template <class K>
std::vector<typename K::Word> minimal_words(std::vector<typename K::Word> ws) {
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  std::vector<typename K::Word> kept;
  kept.reserve(ws.size());
  for (const auto& w : ws) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (K::divides(k, w)) {  // distinct after dedup, so this is strict
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(w);
  }
  return kept;
}

// Minimal transversals (hitting sets) of a family of squarefree supports,
// built incrementally with interleaved minimalization.  Supports must be
// non-empty masks.
std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& supports);

}  // namespace relalg::detail
