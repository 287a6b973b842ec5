#include "ideal.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace euob {

Ideal::Ideal(CtxPtr ctx, std::vector<Polynomial> gens) : ctx_(std::move(ctx)), gens_(std::move(gens)) {
    for (const auto& g : gens_)
        if (!g.is_zero() && g.ctx() != ctx_)
            throw_internal("ideal generator from a different context");
}

bool Ideal::has_basis(const MonomialOrder& ord) const { return cache_ && cache_->ord == ord; }

const std::vector<Polynomial>& Ideal::cached_basis() const {
    if (!cache_) throw_internal("no cached basis");
    return cache_->basis;
}

const MonomialOrder& Ideal::cached_order() const {
    if (!cache_) throw_internal("no cached basis");
    return cache_->ord;
}

Ideal reduced_groebner(const Ideal& I, const MonomialOrder& ord, Budget& budget) {
    auto cache = std::make_shared<Ideal::Cache>();
    cache->ord = ord;
    cache->basis = I.has_basis(ord) ? I.cached_basis()
                                    : reduced_groebner_basis(I.gens(), ord, budget);
    Ideal out(I.ctx(), cache->basis);
    out.cache_ = std::move(cache);
    return out;
}

std::vector<Polynomial> basis_for(const Ideal& I, const MonomialOrder& ord, Budget& budget) {
    if (I.has_basis(ord)) return I.cached_basis();
    return reduced_groebner_basis(I.gens(), ord, budget);
}

bool contains_one(const Ideal& I, Budget& budget) {
    return basis_is_unit(basis_for(I, MonomialOrder::grevlex(I.ctx()), budget));
}

bool ideal_contains(const Ideal& I, const Polynomial& f, Budget& budget) {
    auto ord = MonomialOrder::grevlex(I.ctx());
    auto basis = basis_for(I, ord, budget);
    return normal_form(f, basis, ord, budget).is_zero();
}

bool ideal_equal(const Ideal& A, const Ideal& B, Budget& budget) {
    if (A.ctx()->nvars() != B.ctx()->nvars()) return false;
    auto ba = basis_for(A, MonomialOrder::grevlex(A.ctx()), budget);
    auto bb = basis_for(B, MonomialOrder::grevlex(B.ctx()), budget);
    if (ba.size() != bb.size()) return false;
    for (std::size_t i = 0; i < ba.size(); ++i)
        if (ba[i] != bb[i]) return false;
    return true;
}

Ideal ideal_sum(const Ideal& I, const std::vector<Polynomial>& more) {
    std::vector<Polynomial> gens = I.gens();
    for (const auto& f : more) gens.push_back(f);
    return Ideal(I.ctx(), std::move(gens));
}

Ideal ideal_map(const Ideal& I, const CtxPtr& new_ctx, const std::vector<int>& image) {
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.map_vars(new_ctx, image));
    return Ideal(new_ctx, std::move(gens));
}

Ideal eliminate_front_block(const Ideal& I, Budget& budget, const CtxPtr& target) {
    const CtxPtr& ctx = I.ctx();
    if (ctx->nblocks() < 2) throw_internal("eliminate_front_block needs a trailing block");
    auto ord = MonomialOrder::block(ctx);
    auto basis = basis_for(I, ord, budget);

    std::vector<int> image;
    CtxPtr down = target ? target : ctx_drop_block(ctx, 0, &image);
    if (target) {
        const Block& b0 = ctx->block(0);
        image.assign(ctx->nvars(), -1);
        for (int i = b0.hi; i < ctx->nvars(); ++i) {
            image[i] = target->var_index(ctx->var_name(i));
            if (image[i] < 0)
                throw_internal("elimination target context missing variable " + ctx->var_name(i));
        }
    }

    const Block& b0 = ctx->block(0);
    std::vector<Polynomial> kept;
    for (const auto& p : basis) {
        bool uses = false;
        for (int v = b0.lo; v < b0.hi && !uses; ++v) uses = p.uses_var(v);
        if (!uses) kept.push_back(p.map_vars(down, image));
    }
    return Ideal(down, std::move(kept));
}

Ideal intersect(const Ideal& A, const Ideal& B, Budget& budget) {
    if (A.ctx() != B.ctx()) throw_internal("intersecting ideals over different contexts");
    std::vector<int> up;
    CtxPtr ext = ctx_insert_block_front(A.ctx(), {"_mix", {"_t"}, false}, &up);
    int t = 0;
    Polynomial tp = Polynomial::variable(ext, t);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - tp;
    std::vector<Polynomial> gens;
    for (const auto& a : A.gens())
        if (!a.is_zero()) gens.push_back(tp * a.map_vars(ext, up));
    for (const auto& b : B.gens())
        if (!b.is_zero()) gens.push_back(one_minus_t * b.map_vars(ext, up));
    return eliminate_front_block(Ideal(ext, std::move(gens)), budget, A.ctx());
}

namespace {

Ideal saturate_single(const Ideal& I, const Polynomial& g, Budget& budget) {
    std::vector<int> up;
    CtxPtr ext = ctx_insert_block_front(I.ctx(), {"_sat", {"_t"}, false}, &up);
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens())
        if (!f.is_zero()) gens.push_back(f.map_vars(ext, up));
    Polynomial tg = Polynomial::variable(ext, 0) * g.map_vars(ext, up);
    gens.push_back(tg - Polynomial::constant(ext, 1));
    return eliminate_front_block(Ideal(ext, std::move(gens)), budget, I.ctx());
}

}  // namespace

Ideal saturate(const Ideal& I, const Ideal& J, Budget& budget) {
    std::vector<Polynomial> gs;
    for (const auto& g : J.gens()) {
        if (g.is_zero()) continue;
        bool dup = false;
        for (const auto& h : gs) dup = dup || h == g;
        if (!dup) gs.push_back(g);
    }
    if (gs.empty()) throw_validation("saturation by the zero ideal");
    std::optional<Ideal> acc;
    for (const auto& g : gs) {
        Ideal s = saturate_single(I, g, budget);
        acc = acc ? intersect(*acc, s, budget) : s;
    }
    return *acc;
}

// ---------------------------------------------------------------------------
// dimension and degree

namespace {

std::vector<Monomial> minimal_leads(const std::vector<Polynomial>& basis,
                                    const MonomialOrder& ord) {
    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const auto& p : basis)
        if (!p.is_zero()) lms.push_back(lead_monomial(p, ord));
    // reduced bases are already minimal; recursion byproducts may not be
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < lms.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < lms.size() && !redundant; ++j)
            if (i != j && lms[j].divides(lms[i]) && !(lms[i] == lms[j] && j > i))
                redundant = true;
        if (!redundant) out.push_back(lms[i]);
    }
    return out;
}

// Smallest set of variables meeting every support mask; the complement is a
// maximal independent set, so krull dim = nvars - result.
int min_hitting_set(std::vector<std::uint32_t> supports, int nvars, Budget& budget) {
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::vector<std::uint32_t> minimal;
    for (auto s : supports) {
        bool has_subset = false;
        for (auto t : supports)
            if (t != s && (t & s) == t) {
                has_subset = true;
                break;
            }
        if (!has_subset) minimal.push_back(s);
    }
    int best = nvars;
    std::function<void(std::size_t, std::uint32_t, int)> go = [&](std::size_t from,
                                                                  std::uint32_t hit, int used) {
        budget.charge(1);
        if (used >= best) return;
        std::size_t next = from;
        while (next < minimal.size() && (minimal[next] & hit)) ++next;
        if (next == minimal.size()) {
            best = used;
            return;
        }
        for (int v = 0; v < nvars; ++v)
            if (minimal[next] & (1u << v)) go(next + 1, hit | (1u << v), used + 1);
    };
    go(0, 0, 0);
    return best;
}

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < ms.size() && !redundant; ++j) {
            if (i == j) continue;
            if (ms[j].divides(ms[i]) && ms[i] != ms[j]) redundant = true;
            if (ms[i] == ms[j] && j < i) redundant = true;
        }
        if (!redundant) out.push_back(ms[i]);
    }
    return out;
}

// Numerator K(t) with HS(R/I) = K(t) / (1-t)^nvars, by the variable-splitting
// recursion K(I) = K(I + (x)) + t * K(I : x).
std::vector<long long> hilbert_numerator(std::vector<Monomial> gens, int nvars, Budget& budget) {
    budget.charge(gens.size() + 1);
    for (const auto& g : gens)
        if (g.is_one()) return {};  // unit ideal, zero quotient

    // disjoint supports multiply out directly
    bool disjoint = true;
    for (std::size_t i = 0; i < gens.size() && disjoint; ++i)
        for (std::size_t j = i + 1; j < gens.size() && disjoint; ++j)
            if (!gens[i].coprime(gens[j])) disjoint = false;
    if (disjoint) {
        std::vector<long long> r{1};
        for (const auto& g : gens) {
            std::vector<long long> f(g.deg + 1, 0);
            f[0] = 1;
            f[g.deg] -= 1;
            r = poly_mul(r, f);
        }
        return r;
    }

    // pivot on the variable hitting the most generators
    int pivot = -1, hits = 0;
    for (int v = 0; v < nvars; ++v) {
        int h = 0;
        for (const auto& g : gens)
            if (g.e[v]) ++h;
        if (h > hits) {
            hits = h;
            pivot = v;
        }
    }
    std::vector<Monomial> plus;  // gens of I + (x): x and the x-free gens
    plus.push_back(Monomial::var(pivot));
    std::vector<Monomial> colon;  // gens of I : x
    for (const auto& g : gens) {
        if (!g.e[pivot]) plus.push_back(g);
        Monomial h = g;
        if (h.e[pivot]) {
            h.e[pivot] -= 1;
            h.deg -= 1;
        }
        colon.push_back(h);
    }
    auto a = hilbert_numerator(minimalize_monomials(std::move(plus)), nvars, budget);
    auto b = hilbert_numerator(minimalize_monomials(std::move(colon)), nvars, budget);
    // a + t*b
    std::vector<long long> r = a;
    if (r.size() < b.size() + 1) r.resize(b.size() + 1, 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

}  // namespace

long long staircase_count(const std::vector<Monomial>& lms, int nvars, Budget& budget) {
    std::unordered_set<Monomial, MonomialHash> seen;
    std::vector<Monomial> frontier{Monomial::one()};
    seen.insert(Monomial::one());
    long long count = 0;
    while (!frontier.empty()) {
        Monomial m = frontier.back();
        frontier.pop_back();
        ++count;
        budget.charge(1 + lms.size());
        for (int v = 0; v < nvars; ++v) {
            Monomial next = m.mul(Monomial::var(v));
            if (seen.count(next)) continue;
            bool divisible = false;
            for (const auto& l : lms)
                if (l.divides(next)) {
                    divisible = true;
                    break;
                }
            if (divisible) continue;
            seen.insert(next);
            frontier.push_back(next);
        }
    }
    return count;
}

int krull_dim(const Ideal& I, Budget& budget) {
    auto ord = MonomialOrder::grevlex(I.ctx());
    auto basis = basis_for(I, ord, budget);
    if (basis.empty()) return I.ctx()->nvars();
    if (basis_is_unit(basis)) return -1;
    auto lms = minimal_leads(basis, ord);
    std::vector<std::uint32_t> supports;
    for (const auto& m : lms) {
        std::uint32_t s = 0;
        for (int v = 0; v < I.ctx()->nvars(); ++v)
            if (m.e[v]) s |= 1u << v;
        supports.push_back(s);
    }
    return I.ctx()->nvars() - min_hitting_set(std::move(supports), I.ctx()->nvars(), budget);
}

DimDeg dimension_and_degree(const Ideal& I, Budget& budget) {
    auto ord = MonomialOrder::grevlex(I.ctx());
    auto basis = basis_for(I, ord, budget);
    if (basis_is_unit(basis)) throw_validation("unit ideal: the scheme is empty");
    int n = I.ctx()->nvars();
    if (basis.empty()) return {n, 1};

    auto lms = minimal_leads(basis, ord);
    std::vector<std::uint32_t> supports;
    for (const auto& m : lms) {
        std::uint32_t s = 0;
        for (int v = 0; v < n; ++v)
            if (m.e[v]) s |= 1u << v;
        supports.push_back(s);
    }
    int dim = n - min_hitting_set(std::move(supports), n, budget);

    if (dim == 0) return {0, staircase_count(lms, n, budget)};

    for (const auto& p : basis)
        if (!p.homogeneous_in_span(0, n))
            throw_validation("degree of a positive-dimensional ideal requires homogeneous generators");
    auto K = hilbert_numerator(lms, n, budget);
    // strip (1-t)^(n-dim) by prefix sums; exactness is forced by the dimension
    for (int k = 0; k < n - dim; ++k) {
        long long run = 0;
        for (auto& c : K) {
            run += c;
            c = run;
        }
        if (!K.empty() && K.back() == 0)
            K.pop_back();
        else if (!K.empty())
            throw_internal("Hilbert numerator not divisible at computed dimension");
    }
    long long deg = 0;
    for (long long c : K) deg += c;
    return {dim, deg};
}

}  // namespace euob
