#include "behrend.hpp"

namespace euob {

namespace {

long long sign_of_dim(int dim) { return dim % 2 == 0 ? 1 : -1; }

std::vector<long long> signed_mults(const StratifiedSpace& X,
                                    const std::vector<ConeComponent>& comps) {
    std::vector<long long> a(X.count(), 0);
    for (const auto& c : comps) {
        int z = X.index_of(c.support);
        if (c.dim != X.at(z).dim)
            throw_validation("cone component over " + c.support + " declares dimension " +
                             std::to_string(c.dim) + ", the stratum has " +
                             std::to_string(X.at(z).dim));
        if (c.mult < 1) throw_validation("cone component over " + c.support +
                                         " needs a positive multiplicity");
        a[z] += sign_of_dim(c.dim) * c.mult;
    }
    return a;
}

}  // namespace

BehrendResult behrend_weights(const StratifiedSpace& X, const EuMatrix& e,
                              const std::vector<ConeComponent>& comps) {
    BehrendResult r;
    r.signed_mult = signed_mults(X, comps);
    r.cone_values = eu_transform(X, EuMatrix::smooth_closures(X), r.signed_mult);
    r.nu = eu_transform(X, e, r.signed_mult);
    r.dt = weighted_chi(X, e, r.nu);
    return r;
}

std::vector<long long> lagrangify(const StratifiedSpace& X, const std::vector<long long>& coeffs) {
    if (static_cast<int>(coeffs.size()) != X.count())
        throw_schema("expected one coefficient per stratum");
    std::vector<long long> cycle(X.count());
    for (int z = 0; z < X.count(); ++z) cycle[z] = sign_of_dim(X.at(z).dim) * coeffs[z];
    return cycle;
}

std::vector<long long> project_cycle(const StratifiedSpace& X,
                                     const std::vector<long long>& cycle) {
    return lagrangify(X, cycle);
}

long long intersect_zero_section(const StratifiedSpace& X, const EuMatrix& e,
                                 const std::vector<long long>& cycle) {
    auto coeffs = project_cycle(X, cycle);
    return weighted_chi(X, e, eu_transform(X, e, coeffs));
}

KiemLiResult kiem_li_localized(const StratifiedSpace& X, const EuMatrix& e,
                               const std::vector<ConeComponent>& comps,
                               const std::vector<TangentDecl>& tangents) {
    for (int z = 0; z < X.count(); ++z) {
        if (!X.at(z).fixed) continue;
        for (int s = 0; s < X.count(); ++s)
            if (X.leq(s, z) && !X.at(s).fixed)
                throw_validation("fixed locus is not closed: " + X.at(s).name +
                                 " lies in the closure of fixed stratum " + X.at(z).name);
    }
    for (int s = 0; s < X.count(); ++s)
        if (!X.at(s).fixed && X.at(s).chi != 0)
            throw_validation("free stratum " + X.at(s).name +
                             " has nonzero Euler characteristic, the action cannot be free there");

    KiemLiResult r;
    // the fixed locus is closed, so a closure lies inside it exactly when its
    // open stratum is fixed
    for (const auto& c : comps)
        (X.at(X.index_of(c.support)).fixed ? r.fixed_part : r.moving_part).push_back(c);

    auto total = behrend_weights(X, e, comps);
    r.nu_fixed = eu_transform(X, e, signed_mults(X, r.fixed_part));
    r.nu_moving = eu_transform(X, e, signed_mults(X, r.moving_part));
    r.dt_global = total.dt;

    for (int s = 0; s < X.count(); ++s) {
        if (!X.at(s).fixed) continue;
        r.chi_fixed += X.at(s).chi * r.nu_fixed[s];
        r.chi_moving += X.at(s).chi * r.nu_moving[s];
    }
    r.dt_localized = r.chi_fixed + r.chi_moving;

    r.checks.push_back({"localized count equals the global count", r.dt_global, r.dt_localized,
                        r.dt_global == r.dt_localized});
    for (const auto& t : tangents) {
        int s = X.index_of(t.stratum);
        if (!X.at(s).fixed)
            throw_validation("tangent declaration at " + t.stratum + ", which is not fixed");
        if (X.at(s).dim != 0)
            throw_validation("tangent declaration at " + t.stratum +
                             ", which is not an isolated point");
        long long expected = sign_of_dim(t.dim);
        long long got = total.nu[s];
        r.checks.push_back({"weight at " + t.stratum + " carries the tangent sign", expected, got,
                            expected == got});
    }
    for (const auto& c : r.checks) r.all_pass = r.all_pass && c.pass;
    return r;
}

}  // namespace euob
