#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"

namespace euob {

// One locally closed piece of a stratified space.  chi is the topological
// Euler characteristic of the open stratum, fixed marks it as part of the
// torus-fixed locus when a C* action is in play.
struct Stratum {
    std::string name;
    int dim = 0;
    long long chi = 0;
    bool fixed = false;
};

// A finite poset of strata ordered by closure: leq(s, z) means the stratum s
// lies in the closure of z.  Built from cover edges, each of which must go
// strictly up in dimension, so the order is automatically antisymmetric.
class StratifiedSpace {
  public:
    static StratifiedSpace make(std::vector<Stratum> strata,
                                const std::vector<std::pair<std::string, std::string>>& covers);

    int count() const { return static_cast<int>(strata_.size()); }
    const Stratum& at(int i) const { return strata_[i]; }
    int index_of(const std::string& name) const;
    bool leq(int s, int z) const { return leq_[s][z]; }
    std::vector<int> maximal() const;
    int dim() const;

  private:
    std::vector<Stratum> strata_;
    std::vector<std::vector<bool>> leq_;
};

// Values e[s][z] of the local obstruction of the closure of z at points of s,
// defined for s below z.  Unitriangular: e[z][z] = 1 since a variety is
// generically smooth along its open stratum.
class EuMatrix {
  public:
    // every closure treated as smooth: e[s][z] = 1 whenever s lies below z
    static EuMatrix smooth_closures(const StratifiedSpace& X);

    // smooth default with explicit overrides for singular closures; an
    // override must respect the closure order and leave the diagonal at 1
    static EuMatrix from_entries(
        const StratifiedSpace& X,
        const std::vector<std::tuple<std::string, std::string, long long>>& entries);

    long long at(int s, int z) const { return e_[s][z]; }

  private:
    std::vector<std::vector<long long>> e_;
};

// A constructible function enters either as its values on open strata or as
// coefficients in the basis of local obstructions of stratum closures.  The
// transform is unitriangular, so the two descriptions convert both ways.
std::vector<long long> eu_transform(const StratifiedSpace& X, const EuMatrix& e,
                                    const std::vector<long long>& coeffs);
std::vector<long long> inverse_transform(const StratifiedSpace& X, const EuMatrix& e,
                                         const std::vector<long long>& values);

// Euler characteristic weighted by stratum values, cross-checked against the
// same sum taken in the obstruction basis.
long long weighted_chi(const StratifiedSpace& X, const EuMatrix& e,
                       const std::vector<long long>& values);

}  // namespace euob
