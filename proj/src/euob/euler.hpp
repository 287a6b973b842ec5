#pragma once

#include "nash.hpp"

namespace euob {

// Multiplicity of f at P: order of vanishing of f(x + P) at the origin.
long long multiplicity_at(const Polynomial& f, const std::vector<mpq_class>& point);

// Local obstruction number at a point of the hypersurface f = 0: the
// alternating sum of the Segre numbers of the Nash-fiber over that point.
long long eu_at_point(const Polynomial& f, const std::vector<mpq_class>& point,
                      std::uint64_t seed, Budget& budget);

struct EuCheck {
    std::string name;
    long long expected = 0;
    long long got = 0;
    bool pass = false;
};

struct EuReport {
    std::string poly;  // canonical text of f
    std::vector<mpq_class> point;
    long long eu = 0;
    long long multiplicity = 0;
    SegreVector segre;
    MultidegreeTable table;
    std::vector<EuCheck> checks;
    bool failing = false;  // a failed cross-check signals an implementation bug
};

// Computes eu and runs every cross-check that applies to this input: smooth
// points give 1, plane curves give the multiplicity, an unused variable lets
// the cylinder reduce to fewer variables, and a supplied factorization must
// split eu into a sum over the factors through the point.
EuReport eu_report(const Polynomial& f, const std::vector<mpq_class>& point,
                   const std::vector<Polynomial>& factors, std::uint64_t seed, Budget& budget);

}  // namespace euob
