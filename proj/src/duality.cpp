#include "relalg/duality.hpp"

#include <algorithm>
#include <string>

#include "detail/kernels.hpp"
#include "relalg/errors.hpp"

namespace relalg {

namespace {

// Binary fast path for boundary_dual: with all caps equal to 1 the dual
// generators correspond exactly to the minimal transversals tau of the
// generator supports, packed as sigma_i = 2 on tau and 1 elsewhere.
MonomialIdeal binary_boundary_dual(const MonomialIdeal& ideal) {
  int n = ideal.nvars();
  detail::MaskKernel mask{n};
  std::vector<std::uint64_t> supports;
  supports.reserve(ideal.generator_count());
  for (const Monomial& g : ideal.generators()) supports.push_back(mask.pack(g));

  std::vector<Monomial> gens;
  for (std::uint64_t tau : detail::minimal_transversals(supports)) {
    Exponents e(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i)
      if (tau & (std::uint64_t(1) << (63 - i))) e[static_cast<std::size_t>(i)] = 2;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace

Monomial dual_shift(const Monomial& nu, const Monomial& mu) {
  if (nu.nvars() != mu.nvars()) throw PreconditionError("dual_shift: length mismatch");
  Exponents e(static_cast<std::size_t>(nu.nvars()), 0);
  for (int i = 0; i < nu.nvars(); ++i) {
    if (mu[i] == 0) continue;
    if (mu[i] > nu[i])
      throw PreconditionError("dual_shift: coordinate " + std::to_string(i + 1) +
                              " of the duality vector is below the generator exponent");
    e[static_cast<std::size_t>(i)] = nu[i] + 1 - mu[i];
  }
  return Monomial(std::move(e));
}

MonomialIdeal irreducible_power_ideal(const Monomial& s) {
  std::vector<Monomial> gens;
  for (int i = 0; i < s.nvars(); ++i) {
    if (s[i] == 0) continue;
    Exponents e(static_cast<std::size_t>(s.nvars()), 0);
    e[static_cast<std::size_t>(i)] = s[i];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(s.nvars(), std::move(gens));
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal, const Monomial& nu) {
  if (ideal.nvars() != nu.nvars()) throw PreconditionError("alexander_dual: length mismatch");
  if (ideal.is_zero()) {
    // Empty intersection: the whole ring.
    return MonomialIdeal(ideal.nvars(), {Monomial::one(ideal.nvars())});
  }
  // Generators in canonical order, one intersection at a time; intersect()
  // minimalizes after every step which keeps intermediates small.
  MonomialIdeal acc = irreducible_power_ideal(dual_shift(nu, ideal.generators().front()));
  for (std::size_t k = 1; k < ideal.generator_count(); ++k) {
    acc = intersect(acc, irreducible_power_ideal(dual_shift(nu, ideal.generators()[k])));
    if (acc.is_zero()) break;  // dual of the unit ideal
  }
  return acc;
}

MonomialIdeal boundary_dual(const MonomialIdeal& ideal, const Exponents& caps) {
  int n = ideal.nvars();
  if (static_cast<int>(caps.size()) != n) throw PreconditionError("boundary_dual: caps length mismatch");
  for (int c : caps)
    if (c < 1) throw PreconditionError("boundary_dual: caps must be at least 1");
  for (const Monomial& g : ideal.generators())
    for (int i = 0; i < n; ++i)
      if (g[i] > caps[static_cast<std::size_t>(i)])
        throw PreconditionError("boundary_dual: generator exponent exceeds its cap in variable x" +
                                std::to_string(i + 1));

  bool binary = std::all_of(caps.begin(), caps.end(), [](int c) { return c == 1; });
  if (binary && n <= 64 && !ideal.is_zero() && !ideal.is_unit()) return binary_boundary_dual(ideal);

  // Artinianization: adjoin x_i^{M_i + 1} for every variable.
  std::vector<Monomial> gens = ideal.generators();
  Exponents nu_e(caps);
  for (int i = 0; i < n; ++i) {
    ++nu_e[static_cast<std::size_t>(i)];
    Exponents e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = nu_e[static_cast<std::size_t>(i)];
    gens.emplace_back(std::move(e));
  }
  return alexander_dual(MonomialIdeal(n, std::move(gens)), Monomial(std::move(nu_e)));
}

Exponents boundary_state(const Exponents& caps, const Monomial& dual_gen) {
  if (static_cast<int>(caps.size()) != dual_gen.nvars())
    throw PreconditionError("boundary_state: length mismatch");
  Exponents s(caps.size());
  for (std::size_t i = 0; i < caps.size(); ++i) {
    int v = caps[i] + 1 - dual_gen[static_cast<int>(i)];
    if (v < 0 || dual_gen[static_cast<int>(i)] < 1)
      throw PreconditionError("boundary_state: generator is not a boundary dual generator");
    s[i] = v;
  }
  return s;
}

}  // namespace relalg
