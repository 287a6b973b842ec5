#include "strata.hpp"

#include <algorithm>
#include <set>

namespace euob {

StratifiedSpace StratifiedSpace::make(
    std::vector<Stratum> strata, const std::vector<std::pair<std::string, std::string>>& covers) {
    if (strata.empty()) throw_validation("a stratified space needs at least one stratum");
    StratifiedSpace X;
    X.strata_ = std::move(strata);

    std::set<std::string> seen;
    for (const auto& s : X.strata_) {
        if (s.name.empty()) throw_validation("stratum with an empty name");
        if (!seen.insert(s.name).second) throw_validation("duplicate stratum name: " + s.name);
        if (s.dim < 0) throw_validation("stratum " + s.name + " has negative dimension");
    }

    int n = X.count();
    X.leq_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) X.leq_[i][i] = true;
    for (const auto& [lo, hi] : covers) {
        int s = X.index_of(lo), z = X.index_of(hi);
        if (X.strata_[s].dim >= X.strata_[z].dim)
            throw_validation("cover edge " + lo + " < " + hi + " does not increase dimension");
        X.leq_[s][z] = true;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (X.leq_[i][k])
                for (int j = 0; j < n; ++j)
                    if (X.leq_[k][j]) X.leq_[i][j] = true;
    return X;
}

int StratifiedSpace::index_of(const std::string& name) const {
    for (int i = 0; i < count(); ++i)
        if (strata_[i].name == name) return i;
    throw_schema("unknown stratum: " + name);
}

std::vector<int> StratifiedSpace::maximal() const {
    std::vector<int> out;
    for (int z = 0; z < count(); ++z) {
        bool top = true;
        for (int w = 0; top && w < count(); ++w)
            if (w != z && leq_[z][w]) top = false;
        if (top) out.push_back(z);
    }
    return out;
}

int StratifiedSpace::dim() const {
    int d = 0;
    for (const auto& s : strata_) d = std::max(d, s.dim);
    return d;
}

EuMatrix EuMatrix::smooth_closures(const StratifiedSpace& X) {
    int n = X.count();
    EuMatrix m;
    m.e_.assign(n, std::vector<long long>(n, 0));
    for (int s = 0; s < n; ++s)
        for (int z = 0; z < n; ++z)
            if (X.leq(s, z)) m.e_[s][z] = 1;
    return m;
}

EuMatrix EuMatrix::from_entries(
    const StratifiedSpace& X,
    const std::vector<std::tuple<std::string, std::string, long long>>& entries) {
    EuMatrix m = smooth_closures(X);
    for (const auto& [lo, hi, v] : entries) {
        int s = X.index_of(lo), z = X.index_of(hi);
        if (!X.leq(s, z))
            throw_validation("obstruction entry " + lo + " in " + hi +
                             " does not respect the closure order");
        if (s == z && v != 1)
            throw_validation("obstruction of " + hi + " along its own open stratum must be 1");
        m.e_[s][z] = v;
    }
    return m;
}

namespace {

void check_size(const StratifiedSpace& X, const std::vector<long long>& v) {
    if (static_cast<int>(v.size()) != X.count())
        throw_schema("expected one value per stratum, got " + std::to_string(v.size()));
}

// strata sorted by decreasing dimension, for back substitution
std::vector<int> descending(const StratifiedSpace& X) {
    std::vector<int> idx(X.count());
    for (int i = 0; i < X.count(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return X.at(a).dim > X.at(b).dim; });
    return idx;
}

}  // namespace

std::vector<long long> eu_transform(const StratifiedSpace& X, const EuMatrix& e,
                                    const std::vector<long long>& coeffs) {
    check_size(X, coeffs);
    std::vector<long long> values(X.count(), 0);
    for (int s = 0; s < X.count(); ++s)
        for (int z = 0; z < X.count(); ++z)
            if (X.leq(s, z)) values[s] += e.at(s, z) * coeffs[z];
    return values;
}

std::vector<long long> inverse_transform(const StratifiedSpace& X, const EuMatrix& e,
                                         const std::vector<long long>& values) {
    check_size(X, values);
    std::vector<long long> coeffs(X.count(), 0);
    for (int z : descending(X)) {
        long long rest = 0;
        for (int w = 0; w < X.count(); ++w)
            if (w != z && X.leq(z, w)) rest += e.at(z, w) * coeffs[w];
        coeffs[z] = values[z] - rest;
    }
    return coeffs;
}

long long weighted_chi(const StratifiedSpace& X, const EuMatrix& e,
                       const std::vector<long long>& values) {
    check_size(X, values);
    long long direct = 0;
    for (int s = 0; s < X.count(); ++s) direct += X.at(s).chi * values[s];

    auto coeffs = inverse_transform(X, e, values);
    long long via_basis = 0;
    for (int z = 0; z < X.count(); ++z) {
        long long chi_closure = 0;
        for (int s = 0; s < X.count(); ++s)
            if (X.leq(s, z)) chi_closure += X.at(s).chi * e.at(s, z);
        via_basis += coeffs[z] * chi_closure;
    }
    if (direct != via_basis) throw_internal("weighted chi disagrees with its basis expansion");
    return direct;
}

}  // namespace euob
