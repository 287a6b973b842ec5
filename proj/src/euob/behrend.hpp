#pragma once

#include "strata.hpp"

namespace euob {

// An irreducible component of the intrinsic cone, supported on the closure of
// a stratum, with its geometric multiplicity.
struct ConeComponent {
    std::string support;
    int dim = 0;
    long long mult = 1;
};

struct BehrendResult {
    std::vector<long long> signed_mult;  // (-1)^dim times mult, per stratum
    std::vector<long long> cone_values;  // the cone class as values on strata
    std::vector<long long> nu;           // obstruction-weighted local weights
    long long dt = 0;                    // nu-weighted Euler characteristic
};

// Turn the component list into a signed weight on each stratum.  The cone
// class expands the same coefficients over indicators of closures, the local
// weight nu expands them over obstructions of closures.
BehrendResult behrend_weights(const StratifiedSpace& X, const EuMatrix& e,
                              const std::vector<ConeComponent>& comps);

// Passage between constructible coefficients and conormal cycles: a closure
// contributes its conormal with the sign of its dimension.  The two maps are
// mutually inverse.
std::vector<long long> lagrangify(const StratifiedSpace& X, const std::vector<long long>& coeffs);
std::vector<long long> project_cycle(const StratifiedSpace& X,
                                     const std::vector<long long>& cycle);

// Intersection number of a conormal cycle with the zero section, equal to the
// weighted Euler characteristic of the matching constructible function.
long long intersect_zero_section(const StratifiedSpace& X, const EuMatrix& e,
                                 const std::vector<long long>& cycle);

// Isolated torus-fixed point with the dimension of its tangent space, for
// sign spot checks in the localization report.
struct TangentDecl {
    std::string stratum;
    int dim = 0;
};

struct BehrendCheck {
    std::string name;
    long long expected = 0;
    long long got = 0;
    bool pass = false;
};

struct KiemLiResult {
    std::vector<ConeComponent> fixed_part;
    std::vector<ConeComponent> moving_part;
    std::vector<long long> nu_fixed;
    std::vector<long long> nu_moving;
    long long chi_fixed = 0;
    long long chi_moving = 0;
    long long dt_global = 0;
    long long dt_localized = 0;
    std::vector<BehrendCheck> checks;
    bool all_pass = true;
};

// Split the cone along the fixed locus and compare the localized count
// against the global one.  Requires the fixed strata to form a closed subset
// and every free stratum to have Euler characteristic zero.
KiemLiResult kiem_li_localized(const StratifiedSpace& X, const EuMatrix& e,
                               const std::vector<ConeComponent>& comps,
                               const std::vector<TangentDecl>& tangents);

}  // namespace euob
