#pragma once

#include <vector>

#include "budget.hpp"
#include "polynomial.hpp"

namespace euob {

// Unique reduced Groebner basis for the given order: leading coefficients
// positive, every generator primitive over the integers, tails fully reduced,
// generators sorted ascending by leading monomial.  Zero input generators are
// dropped; an empty result means the zero ideal.
std::vector<Polynomial> reduced_groebner_basis(const std::vector<Polynomial>& gens,
                                               const MonomialOrder& ord, Budget& budget);

// Canonical remainder of f modulo a Groebner basis (exact rational
// coefficients, every monomial irreducible).  Linear in f for fixed basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, Budget& budget);

// Leading monomial of a nonzero polynomial under an arbitrary order (the
// stored term order is canonical grevlex, which may disagree).
Monomial lead_monomial(const Polynomial& p, const MonomialOrder& ord);

// True when the basis is {nonzero constant}, i.e. the ideal is (1).
bool basis_is_unit(const std::vector<Polynomial>& basis);

}  // namespace euob
