#pragma once

#include <cstdint>

#include "budget.hpp"
#include "polynomial.hpp"

namespace euob {

// Seeded draws for "generic" slicing data.  mt19937_64 has a standardized
// output sequence and the value set is reduced by plain modulo, so the same
// (seed, block, draw) triple produces the same form on every platform.

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);
std::uint64_t hash_name(const std::string& name);

// Nonzero linear form in the variables of one block, coefficients from a
// fixed 16-element set of small rationals.  with_constant adds an affine
// offset term (for cutting non-cone loci away from the origin).
Polynomial generic_linear_form(const CtxPtr& ctx, int block, std::uint64_t seed,
                               std::uint64_t draw_index, bool with_constant);

// Same, but with nonzero 32-bit integer coefficients.  Dehomogenizing slices
// must miss finitely many known directions, so the coefficient set is wide
// where the cut forms can stay small.
Polynomial generic_wide_form(const CtxPtr& ctx, int block, std::uint64_t seed,
                             std::uint64_t draw_index);

}  // namespace euob
