#include "detail/kernels.hpp"

#include <algorithm>
#include <cassert>

namespace relalg::detail {

bool MaskKernel::applicable(const std::vector<Monomial>& gens) const {
  if (nvars < 1 || nvars > 64) return false;
  return std::all_of(gens.begin(), gens.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

MaskKernel::Word MaskKernel::pack(const Monomial& m) const {
  Word w = 0;
  for (int i = 0; i < nvars; ++i)
    if (m[i] > 0) w |= Word(1) << (63 - i);
  return w;
}

Monomial MaskKernel::unpack(Word w) const {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  for (int i = 0; i < nvars; ++i)
    if (w & (Word(1) << (63 - i))) e[static_cast<std::size_t>(i)] = 1;
  return Monomial(std::move(e));
}

bool NibbleKernel::applicable(const std::vector<Monomial>& gens) const {
  if (nvars < 1 || nvars > 16) return false;
  for (const Monomial& g : gens)
    for (int i = 0; i < nvars; ++i)
      if (g[i] > 7) return false;
  return true;
}

NibbleKernel::Word NibbleKernel::pack(const Monomial& m) const {
  Word w = 0;
  for (int i = 0; i < nvars; ++i) {
    assert(m[i] <= 7);
    w |= static_cast<Word>(m[i]) << (4 * (15 - i));
  }
  return w;
}

Monomial NibbleKernel::unpack(Word w) const {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  for (int i = 0; i < nvars; ++i)
    e[static_cast<std::size_t>(i)] = static_cast<int>((w >> (4 * (15 - i))) & 0xF);
  return Monomial(std::move(e));
}

std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& supports) {
  // Incremental (Berge) construction in the given order; the result is
  // order-independent, and the canonical order performs well because
  // neighbouring supports overlap.
  std::vector<std::uint64_t> trans{0};
  for (std::uint64_t s : supports) {
    assert(s != 0 && "transversals need non-empty supports");
    std::vector<std::uint64_t> next;
    next.reserve(trans.size() * 2);
    for (std::uint64_t t : trans) {
      if (t & s) {
        next.push_back(t);  // already hits this support
      } else {
        for (std::uint64_t rest = s; rest;) {
          std::uint64_t bit = rest & (~rest + 1);
          next.push_back(t | bit);
          rest ^= bit;
        }
      }
    }
    trans = minimal_words<MaskKernel>(std::move(next));
  }
  std::sort(trans.begin(), trans.end());
  return trans;
}

}  // namespace relalg::detail
