#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "groebner.hpp"

namespace euob {

// Generator list over a shared context, with an optional attached reduced
// Groebner basis.  Value type: reduced_groebner returns a new Ideal carrying
// the basis rather than mutating in place.
class Ideal {
public:
    Ideal() = default;
    Ideal(CtxPtr ctx, std::vector<Polynomial> gens);

    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    bool has_basis(const MonomialOrder& ord) const;
    const std::vector<Polynomial>& cached_basis() const;
    const MonomialOrder& cached_order() const;

private:
    friend Ideal reduced_groebner(const Ideal&, const MonomialOrder&, Budget&);

    struct Cache {
        MonomialOrder ord;
        std::vector<Polynomial> basis;
    };

    CtxPtr ctx_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<const Cache> cache_;
};

// Basis computation and queries ---------------------------------------------

// Returns I with generators replaced by the reduced basis for ord.
Ideal reduced_groebner(const Ideal& I, const MonomialOrder& ord, Budget& budget);

// Basis for ord, reusing the cache when it matches.
std::vector<Polynomial> basis_for(const Ideal& I, const MonomialOrder& ord, Budget& budget);

bool contains_one(const Ideal& I, Budget& budget);
bool ideal_contains(const Ideal& I, const Polynomial& f, Budget& budget);
// Equality of ideals via grevlex reduced bases.
bool ideal_equal(const Ideal& A, const Ideal& B, Budget& budget);

// Construction ---------------------------------------------------------------

Ideal ideal_sum(const Ideal& I, const std::vector<Polynomial>& more);
// Transport gens to another context along a variable index map.
Ideal ideal_map(const Ideal& I, const CtxPtr& new_ctx, const std::vector<int>& image);

// Elimination-based operations ------------------------------------------------

// I's context must have the block to eliminate at position 0.  Computes a
// block-order basis and keeps the generators free of that block, over the
// context with the block removed.  When target is given it must contain the
// remaining variables by name; the result is expressed over it so pointer
// identity with pre-existing contexts is preserved.
Ideal eliminate_front_block(const Ideal& I, Budget& budget, const CtxPtr& target = nullptr);

Ideal intersect(const Ideal& A, const Ideal& B, Budget& budget);

// sat(I, J) = { f : f * J^k in I for some k }, computed as the intersection
// of the single-generator saturations.  J must not be the zero ideal.
Ideal saturate(const Ideal& I, const Ideal& J, Budget& budget);

// Dimension and degree ---------------------------------------------------------

struct DimDeg {
    int dim;
    long long degree;
};

// Krull dimension of the quotient ring, from the leading-term staircase.
// Returns -1 for the unit ideal; n for the zero ideal.
int krull_dim(const Ideal& I, Budget& budget);

// dim 0: degree is the vector-space dimension of the quotient (counts
// multiplicity).  dim > 0 requires a homogeneous ideal and uses the Hilbert
// series.  Unit ideal is a validation error.
DimDeg dimension_and_degree(const Ideal& I, Budget& budget);

// Number of standard monomials for a zero-dimensional leading-term staircase.
long long staircase_count(const std::vector<Monomial>& lms, int nvars, Budget& budget);

}  // namespace euob
