#pragma once

#include <cstdint>
#include <vector>

#include "genlin.hpp"
#include "ideal.hpp"

namespace euob {

// Closure of the graph of the rational map p -> [maps(p)] over V(base),
// inside V(base) x P^(k-1).  The result lives over base's context extended by
// a trailing projective block named block_name with vars prefix1..prefixk.
// Computed by eliminating a scalar parameter t from base + (w_i - t*maps_i),
// which for our reduced bases yields exactly the vanishing ideal of the
// closure (cross-checked in tests against the saturation route).
Ideal graph_closure(const Ideal& base, const std::vector<Polynomial>& maps,
                    const std::string& block_name, const std::string& var_prefix,
                    Budget& budget);

// Saturation route to the same closure: base + 2x2 minors of [w; maps],
// saturated by (maps).  Quadratic in cost next to graph_closure; kept for
// cross-validation.
Ideal graph_closure_by_saturation(const Ideal& base, const std::vector<Polynomial>& maps,
                                  const std::string& block_name, const std::string& var_prefix,
                                  Budget& budget);

// Graph of the gradient direction map x -> [grad f(x)] over the hypersurface
// f = 0, i.e. the Nash modification of the hypersurface embedded in
// A^n x P^(n-1).
struct GaussGraph {
    Polynomial f;    // over the affine context, squarefree
    CtxPtr ctx;      // [user block | _gauss block]
    Ideal graph;     // radical ideal of the graph closure's cone
    int n = 0;       // ambient affine dimension
    int d = 0;       // hypersurface dimension, n - 1
};

GaussGraph gauss_graph(const Polynomial& f, Budget& budget);

// graph + (x = P); the scheme-theoretic fiber of the Nash modification.
Ideal fiber_ideal(const GaussGraph& g, const std::vector<mpq_class>& point);

// Multidegree table of a multi-projective (possibly affine-mixed) scheme.
// Key = number of generic hyperplane cuts per context block, summing to the
// scheme's dimension; value = the count of points of the sliced scheme.
// Every entry is computed under three derived seeds and must agree.
struct MultidegreeTable {
    std::vector<std::string> block_names;
    std::vector<std::pair<std::vector<int>, long long>> entries;  // key-sorted

    long long at(const std::vector<int>& key) const;
};

MultidegreeTable multidegrees(const Ideal& I, std::uint64_t seed, Budget& budget);

// Segre numbers s(0..d) of the Nash-fiber over one point, read off the
// exceptional divisor of the blow-up of the graph along that fiber.  s[d] is
// always zero (the exceptional locus is a divisor).
struct SegreVector {
    std::vector<long long> s;

    long long alternating_sum() const {
        long long total = 0;
        for (std::size_t m = 0; m < s.size(); ++m) total += (m % 2 ? -1 : 1) * s[m];
        return total;
    }
};

struct SegreResult {
    SegreVector segre;
    MultidegreeTable table;  // of the exceptional divisor
};

SegreResult segre_fiber(const GaussGraph& g, const std::vector<mpq_class>& point,
                        std::uint64_t seed, Budget& budget);

}  // namespace euob
