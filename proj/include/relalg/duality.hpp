#pragma once

#include "relalg/ideal.hpp"
#include "relalg/monomial.hpp"

namespace relalg {

// The vector nu\mu with coordinates nu_i + 1 - mu_i where mu_i >= 1 and 0
// elsewhere.  Requires mu <= nu componentwise.
Monomial dual_shift(const Monomial& nu, const Monomial& mu);

// The irreducible ideal m^s = <x_i^{s_i} | s_i >= 1>.  The all-zeros vector
// gives the zero ideal (empty intersection of variables).
MonomialIdeal irreducible_power_ideal(const Monomial& s);

// Alexander dual with respect to nu: the intersection of m^{nu\mu} over the
// minimal generators x^mu of the ideal.  nu must dominate every generator.
// Applied twice with the same nu this is the identity.  The dual of the zero
// ideal is the unit ideal and vice versa.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal, const Monomial& nu);

// Dual used for boundary analysis of a level ideal with component caps M_i:
// the ideal is first made artinian by adjoining x_i^{M_i + 1} and then
// dualized with nu_i = M_i + 1.  Each dual generator sigma encodes the
// maximal state outside the ideal nu - sigma (see boundary_state).
// Generator exponents must not exceed their caps.
MonomialIdeal boundary_dual(const MonomialIdeal& ideal, const Exponents& caps);

// Decodes a boundary_dual generator into its state vector (M_i + 1) - sigma_i.
Exponents boundary_state(const Exponents& caps, const Monomial& dual_gen);

}  // namespace relalg
