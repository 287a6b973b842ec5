#include "nash.hpp"

#include <algorithm>

namespace euob {

namespace {

std::vector<std::string> numbered_vars(const std::string& prefix, int count) {
    std::vector<std::string> names;
    for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

Polynomial set_span_zero(const Polynomial& p, int lo, int hi) {
    std::vector<Term> keep;
    for (const auto& t : p.terms())
        if (t.m.deg_span(lo, hi) == 0) keep.push_back(t);
    return Polynomial::from_terms(p.ctx(), std::move(keep));
}

}  // namespace

Ideal graph_closure(const Ideal& base, const std::vector<Polynomial>& maps,
                    const std::string& block_name, const std::string& var_prefix,
                    Budget& budget) {
    const CtxPtr& C = base.ctx();
    int nc = C->nvars();
    int k = static_cast<int>(maps.size());
    std::vector<int> keep;
    CtxPtr Cw = ctx_append_block(C, {block_name, numbered_vars(var_prefix, k), true}, &keep);
    std::vector<int> up;
    CtxPtr E = ctx_insert_block_front(Cw, {"_lam", {"_l"}, false}, &up);

    std::vector<int> c_to_e(nc);
    for (int i = 0; i < nc; ++i) c_to_e[i] = 1 + i;
    std::vector<Polynomial> gens;
    for (const auto& g : base.gens())
        if (!g.is_zero()) gens.push_back(g.map_vars(E, c_to_e));
    Polynomial lam = Polynomial::variable(E, 0);
    for (int j = 0; j < k; ++j) {
        Polynomial wj = Polynomial::variable(E, 1 + nc + j);
        gens.push_back(wj - lam * maps[j].map_vars(E, c_to_e));
    }
    return eliminate_front_block(Ideal(E, std::move(gens)), budget, Cw);
}

Ideal graph_closure_by_saturation(const Ideal& base, const std::vector<Polynomial>& maps,
                                  const std::string& block_name, const std::string& var_prefix,
                                  Budget& budget) {
    const CtxPtr& C = base.ctx();
    int nc = C->nvars();
    int k = static_cast<int>(maps.size());
    std::vector<int> keep;
    CtxPtr Cw = ctx_append_block(C, {block_name, numbered_vars(var_prefix, k), true}, &keep);
    std::vector<int> c_to_w(nc);
    for (int i = 0; i < nc; ++i) c_to_w[i] = i;

    std::vector<Polynomial> m_up;
    for (const auto& m : maps) m_up.push_back(m.map_vars(Cw, c_to_w));
    std::vector<Polynomial> gens;
    for (const auto& g : base.gens())
        if (!g.is_zero()) gens.push_back(g.map_vars(Cw, c_to_w));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Polynomial wi = Polynomial::variable(Cw, nc + i);
            Polynomial wj = Polynomial::variable(Cw, nc + j);
            Polynomial minor = wi * m_up[j] - wj * m_up[i];
            if (!minor.is_zero()) gens.push_back(minor);
        }
    std::vector<Polynomial> denom;
    for (const auto& m : m_up)
        if (!m.is_zero()) denom.push_back(m);
    return saturate(Ideal(Cw, std::move(gens)), Ideal(Cw, std::move(denom)), budget);
}

GaussGraph gauss_graph(const Polynomial& f, Budget& budget) {
    const CtxPtr& C = f.ctx();
    if (!C || C->nblocks() != 1 || C->block(0).projective)
        throw_validation("hypersurface polynomial must live in a single affine block");
    int n = C->nvars();
    if (n < 2) throw_validation("need at least 2 variables for a hypersurface");
    if (f.is_zero() || f.is_constant()) throw_validation("hypersurface polynomial is constant");

    std::vector<Polynomial> grad;
    for (int i = 0; i < n; ++i) grad.push_back(f.derivative(i));

    // squarefree test: a repeated factor would make the singular locus a
    // divisor inside V(f)
    std::vector<Polynomial> sing = grad;
    sing.push_back(f);
    if (krull_dim(Ideal(C, sing), budget) > n - 2)
        throw_validation("polynomial is not squarefree: singular locus has codimension 1");

    GaussGraph g;
    g.f = f;
    g.n = n;
    g.d = n - 1;
    g.graph = graph_closure(Ideal(C, {f}), grad, "_gauss", "_g", budget);
    g.ctx = g.graph.ctx();
    if (krull_dim(g.graph, budget) != n)
        throw_internal("graph closure has unexpected dimension");
    return g;
}

Ideal fiber_ideal(const GaussGraph& g, const std::vector<mpq_class>& point) {
    if (static_cast<int>(point.size()) != g.n)
        throw_schema("point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(g.n));
    if (g.f.eval(point) != 0) throw_validation("point does not lie on the hypersurface");
    std::vector<Polynomial> cuts;
    for (int i = 0; i < g.n; ++i)
        cuts.push_back(Polynomial::variable(g.ctx, i) - Polynomial::constant(g.ctx, point[i]));
    return ideal_sum(g.graph, cuts);
}

long long MultidegreeTable::at(const std::vector<int>& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    throw_internal("multidegree key out of range");
}

namespace {

constexpr std::uint64_t kDehomogDraw = 1ull << 20;

// Each projective block is dehomogenized by slicing the cone with a generic
// affine hyperplane: every ray of the cone crosses it exactly once and local
// lengths are preserved, so the slice count is the degree.  The hyperplane
// misses a point only when its coefficient vector lies on one specific
// rational hyperplane, so the coefficients come from the wide set.
long long slice_degree(const std::vector<Polynomial>& basis, const CtxPtr& ctx,
                       const std::vector<int>& key, std::uint64_t subseed, Budget& budget) {
    std::vector<Polynomial> gens = basis;
    for (int b = 0; b < ctx->nblocks(); ++b) {
        bool proj = ctx->block(b).projective;
        for (int k = 0; k < key[b]; ++k)
            gens.push_back(generic_linear_form(ctx, b, subseed, k, !proj));
        if (proj)
            gens.push_back(generic_wide_form(ctx, b, subseed, kDehomogDraw) -
                           Polynomial::constant(ctx, 1));
    }
    auto ord = MonomialOrder::grevlex(ctx);
    Ideal slice = reduced_groebner(Ideal(ctx, std::move(gens)), ord, budget);
    if (basis_is_unit(slice.cached_basis())) return 0;
    if (krull_dim(slice, budget) != 0)
        throw_seed("generic slice is not finite; rerun with a different seed");
    std::vector<Monomial> lms;
    for (const auto& p : slice.cached_basis()) lms.push_back(lead_monomial(p, ord));
    return staircase_count(lms, ctx->nvars(), budget);
}

void enumerate_keys(const CtxPtr& ctx, int b, int remaining, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
    if (b == ctx->nblocks()) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    const Block& blk = ctx->block(b);
    int cap = blk.projective ? blk.size() - 1 : blk.size();
    for (int c = 0; c <= std::min(cap, remaining); ++c) {
        current.push_back(c);
        enumerate_keys(ctx, b + 1, remaining - c, current, out);
        current.pop_back();
    }
}

}  // namespace

MultidegreeTable multidegrees(const Ideal& I, std::uint64_t seed, Budget& budget) {
    const CtxPtr& ctx = I.ctx();
    auto ord = MonomialOrder::grevlex(ctx);
    Ideal J = reduced_groebner(I, ord, budget);
    if (basis_is_unit(J.cached_basis())) throw_validation("empty scheme has no multidegrees");

    int cone_dim = krull_dim(J, budget);
    int nproj = 0;
    for (const auto& b : ctx->blocks()) nproj += b.projective ? 1 : 0;
    int dim = cone_dim - nproj;
    if (dim < 0) throw_validation("scheme is empty away from the irrelevant loci");

    std::vector<std::vector<int>> keys;
    std::vector<int> current;
    enumerate_keys(ctx, 0, dim, current, keys);

    MultidegreeTable table;
    for (const auto& b : ctx->blocks()) table.block_names.push_back(b.name);
    for (const auto& key : keys) {
        long long value = 0;
        for (int variant = 0; variant < 3; ++variant) {
            long long v = slice_degree(J.cached_basis(), ctx, key, mix_seed(seed, variant), budget);
            if (variant == 0)
                value = v;
            else if (v != value)
                throw_seed("multidegree entry disagrees between seeds; rerun with a new --seed");
        }
        table.entries.emplace_back(key, value);
    }
    std::sort(table.entries.begin(), table.entries.end());
    return table;
}

SegreResult segre_fiber(const GaussGraph& g, const std::vector<mpq_class>& point,
                        std::uint64_t seed, Budget& budget) {
    if (static_cast<int>(point.size()) != g.n)
        throw_schema("point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(g.n));
    if (g.f.eval(point) != 0) throw_validation("point does not lie on the hypersurface");

    // move the point to the origin
    std::vector<mpq_class> shift(g.ctx->nvars(), 0);
    for (int i = 0; i < g.n; ++i) shift[i] = point[i];
    std::vector<Polynomial> shifted;
    for (const auto& p : g.graph.gens())
        if (!p.is_zero()) shifted.push_back(p.translate(shift));
    Ideal G0(g.ctx, std::move(shifted));

    // blow up the graph along the fiber x = 0; the z-block records [x]
    std::vector<Polynomial> coords;
    for (int i = 0; i < g.n; ++i) coords.push_back(Polynomial::variable(g.ctx, i));
    Ideal B = graph_closure(G0, coords, "_exc", "_e", budget);

    // the exceptional divisor: restrict to x = 0 and forget the x block
    const CtxPtr& bctx = B.ctx();
    CtxPtr dctx = VarContext::make({{"_gauss", numbered_vars("_g", g.n), true},
                                    {"_exc", numbered_vars("_e", g.n), true}});
    const Block& xblk = bctx->block(0);
    std::vector<int> image(bctx->nvars(), -1);
    for (int i = xblk.hi; i < bctx->nvars(); ++i) image[i] = i - xblk.hi;
    std::vector<Polynomial> dgens;
    for (const auto& p : B.gens()) {
        Polynomial q = set_span_zero(p, xblk.lo, xblk.hi);
        if (!q.is_zero()) dgens.push_back(q.map_vars(dctx, image));
    }
    Ideal D(dctx, std::move(dgens));

    SegreResult result;
    result.table = multidegrees(D, seed, budget);
    for (const auto& [key, value] : result.table.entries)
        if (key[0] + key[1] != g.d - 1)
            throw_internal("exceptional divisor has unexpected dimension");

    result.segre.s.assign(g.d + 1, 0);
    for (int m = 0; m <= g.d - 1; ++m) result.segre.s[m] = result.table.at({m, g.d - 1 - m});
    return result;
}

}  // namespace euob
