#include "groebner.hpp"

#include <algorithm>

namespace euob {

namespace {

// Engine-side polynomial: integer coefficients, terms sorted descending by
// the working order.  Scale is irrelevant for basis building, so everything
// is kept primitive with a positive lead.
struct ETerm {
    Monomial m;
    mpz_class c;
};

struct EPoly {
    std::vector<ETerm> t;

    bool zero() const { return t.empty(); }
    const Monomial& lm() const { return t.front().m; }
    const mpz_class& lc() const { return t.front().c; }
};

void make_primitive(EPoly& p) {
    if (p.t.empty()) return;
    mpz_class g = 0;
    for (const auto& t : p.t) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (p.t.front().c < 0) g = -g;
    if (g == 1) return;
    for (auto& t : p.t) t.c /= g;
}

EPoly to_engine(const Polynomial& p, const MonomialOrder& ord) {
    Polynomial q = p.primitive();
    EPoly e;
    e.t.reserve(q.terms().size());
    for (const auto& t : q.terms()) e.t.push_back({t.m, t.c.get_num()});
    std::sort(e.t.begin(), e.t.end(),
              [&](const ETerm& a, const ETerm& b) { return ord.greater(a.m, b.m); });
    return e;
}

Polynomial from_engine(const EPoly& e, const CtxPtr& ctx) {
    std::vector<Term> terms;
    terms.reserve(e.t.size());
    for (const auto& t : e.t) terms.push_back({t.m, mpq_class(t.c)});
    return Polynomial::from_terms(ctx, std::move(terms));
}

// r = a*f - b*(u * g), with the heads arranged to cancel when f.lm == u*g.lm.
// Written as a merge so each call is linear in |f| + |g|.
EPoly combine(const EPoly& f, const mpz_class& a, const EPoly& g, const mpz_class& b,
              const Monomial& u, const MonomialOrder& ord) {
    EPoly r;
    r.t.reserve(f.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    while (i < f.t.size() && j < g.t.size()) {
        Monomial gm = g.t[j].m.mul(u);
        int c = ord.compare(f.t[i].m, gm);
        if (c > 0) {
            r.t.push_back({f.t[i].m, a * f.t[i].c});
            ++i;
        } else if (c < 0) {
            r.t.push_back({gm, -b * g.t[j].c});
            ++j;
        } else {
            mpz_class s = a * f.t[i].c - b * g.t[j].c;
            if (s != 0) r.t.push_back({f.t[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < f.t.size(); ++i) r.t.push_back({f.t[i].m, a * f.t[i].c});
    for (; j < g.t.size(); ++j) r.t.push_back({g.t[j].m.mul(u), -b * g.t[j].c});
    return r;
}

class Engine {
public:
    struct Pair {
        int i, j;
        Monomial l;
    };

    Engine(const MonomialOrder& ord, Budget& budget) : ord_(ord), budget_(budget) {}

    // Full normal form, fraction free: result is primitive, every monomial
    // irreducible against the current basis.
    EPoly reduce_full(EPoly p, const std::vector<int>& reducers) {
        std::size_t fixed = 0;
        int steps = 0;
        while (fixed < p.t.size()) {
            const Monomial& h = p.t[fixed].m;
            int gi = -1;
            for (int k : reducers) {
                if (lm_[k].divides(h)) {
                    gi = k;
                    break;
                }
            }
            if (gi < 0) {
                ++fixed;
                continue;
            }
            const EPoly& g = g_[gi];
            budget_.charge(p.t.size() - fixed + g.t.size());
            Monomial u = h.div(lm_[gi]);
            mpz_class d;
            mpz_gcd(d.get_mpz_t(), p.t[fixed].c.get_mpz_t(), g.lc().get_mpz_t());
            mpz_class a = g.lc() / d;
            mpz_class b = p.t[fixed].c / d;
            if (a < 0) {
                a = -a;
                b = -b;
            }
            // rescale the already-fixed prefix to keep one consistent scalar
            EPoly tail;
            tail.t.assign(p.t.begin() + fixed, p.t.end());
            p.t.resize(fixed);
            for (auto& t : p.t) t.c *= a;
            EPoly merged = combine(tail, a, g, b, u, ord_);
            for (auto& t : merged.t) p.t.push_back(std::move(t));
            if (++steps % 32 == 0) make_primitive(p);
        }
        make_primitive(p);
        return p;
    }

    EPoly spoly(int i, int j) {
        const Monomial L = lm_[i].lcm(lm_[j]);
        Monomial u = L.div(lm_[i]);
        Monomial v = L.div(lm_[j]);
        mpz_class d;
        mpz_gcd(d.get_mpz_t(), g_[i].lc().get_mpz_t(), g_[j].lc().get_mpz_t());
        mpz_class a = g_[j].lc() / d;
        mpz_class b = g_[i].lc() / d;
        budget_.charge(g_[i].t.size() + g_[j].t.size());
        // a*u*g_i - b*v*g_j; reuse combine by pre-multiplying g_i's monomials
        EPoly uf;
        uf.t.reserve(g_[i].t.size());
        for (const auto& t : g_[i].t) uf.t.push_back({t.m.mul(u), t.c});
        EPoly r = combine(uf, a, g_[j], b, v, ord_);
        make_primitive(r);
        return r;
    }

    std::vector<int> alive() const {
        std::vector<int> out;
        for (int k = 0; k < static_cast<int>(g_.size()); ++k) out.push_back(k);
        return out;
    }

    void add(EPoly h) {
        int t = static_cast<int>(g_.size());
        Monomial Lt = h.lm();

        // Gebauer-Moller pair update.
        // Chain criterion on the existing queue: a pair (i,j) is dropped when
        // the new lead divides lcm(i,j) strictly finer than both mixed lcms.
        std::vector<Pair> kept;
        kept.reserve(pairs_.size());
        for (auto& pr : pairs_) {
            if (Lt.divides(pr.l) && lm_[pr.i].lcm(Lt) != pr.l && lm_[pr.j].lcm(Lt) != pr.l)
                continue;
            kept.push_back(std::move(pr));
        }
        pairs_ = std::move(kept);

        struct Cand {
            int i;
            Monomial l;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(g_.size());
        for (int i = 0; i < t; ++i)
            cands.push_back({i, lm_[i].lcm(Lt), lm_[i].coprime(Lt)});

        // M criterion: drop candidates whose lcm is a proper multiple of
        // another candidate's lcm.
        std::vector<bool> drop(cands.size(), false);
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (cands[b].l != cands[a].l && cands[b].l.divides(cands[a].l)) drop[a] = true;
            }
        }
        // F criterion: one representative per lcm value, preferring a coprime
        // one (which the B criterion then removes entirely).
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            std::size_t best = a;
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                if (drop[b] || cands[b].l != cands[a].l) continue;
                if (cands[b].coprime && !cands[best].coprime) best = b;
                drop[b] = true;
            }
            if (best != a) {
                drop[best] = false;
                drop[a] = true;
            }
        }
        // B criterion: coprime leads reduce to zero.
        for (std::size_t a = 0; a < cands.size(); ++a)
            if (!drop[a] && cands[a].coprime) drop[a] = true;

        for (std::size_t a = 0; a < cands.size(); ++a)
            if (!drop[a]) pairs_.push_back({cands[a].i, t, cands[a].l});

        lm_.push_back(Lt);
        g_.push_back(std::move(h));
    }

    bool pairs_empty() const { return pairs_.empty(); }

    // normal selection: smallest lcm by (degree, order), ties by indices
    Pair pop_pair() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const Pair& a = pairs_[k];
            const Pair& b = pairs_[best];
            bool better;
            if (a.l.deg != b.l.deg)
                better = a.l.deg < b.l.deg;
            else {
                int c = ord_.compare(a.l, b.l);
                if (c != 0)
                    better = c < 0;
                else
                    better = std::pair(a.j, a.i) < std::pair(b.j, b.i);
            }
            if (better) best = k;
        }
        Pair p = pairs_[best];
        pairs_.erase(pairs_.begin() + best);
        return p;
    }

    const std::vector<EPoly>& basis() const { return g_; }
    const std::vector<Monomial>& leads() const { return lm_; }
    const MonomialOrder& ord() const { return ord_; }

private:
    const MonomialOrder& ord_;
    Budget& budget_;
    std::vector<EPoly> g_;
    std::vector<Monomial> lm_;
    std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> reduced_groebner_basis(const std::vector<Polynomial>& gens,
                                               const MonomialOrder& ord, Budget& budget) {
    CtxPtr ctx;
    std::vector<EPoly> input;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!ctx) ctx = g.ctx();
        input.push_back(to_engine(g, ord));
    }
    if (input.empty()) return {};
    std::sort(input.begin(), input.end(),
              [&](const EPoly& a, const EPoly& b) { return ord.less(a.lm(), b.lm()); });

    Engine eng(ord, budget);
    for (auto& p : input) {
        EPoly r = eng.reduce_full(std::move(p), eng.alive());
        if (!r.zero()) eng.add(std::move(r));
    }
    while (!eng.pairs_empty()) {
        budget.charge(1);
        auto pr = eng.pop_pair();
        EPoly s = eng.spoly(pr.i, pr.j);
        if (s.zero()) continue;
        EPoly r = eng.reduce_full(std::move(s), eng.alive());
        if (!r.zero()) eng.add(std::move(r));
    }

    // minimal basis: drop elements whose lead is divisible by another lead
    const auto& g = eng.basis();
    const auto& lm = eng.leads();
    std::vector<int> order(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return ord.less(lm[a], lm[b]); });
    std::vector<int> kept;
    for (int k : order) {
        bool redundant = false;
        for (int other : kept)
            if (lm[other].divides(lm[k])) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(k);
    }

    // tail reduction: one full normal form against the other survivors gives
    // the unique reduced element for each lead
    Engine final_eng(ord, budget);
    for (int k : kept) final_eng.add(g[k]);
    std::vector<Polynomial> out;
    out.reserve(kept.size());
    for (std::size_t pos = 0; pos < kept.size(); ++pos) {
        std::vector<int> others;
        for (std::size_t q = 0; q < kept.size(); ++q)
            if (q != pos) others.push_back(static_cast<int>(q));
        EPoly r = final_eng.reduce_full(final_eng.basis()[pos], others);
        out.push_back(from_engine(r, ctx));
    }
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, Budget& budget) {
    if (f.is_zero()) return f;
    struct Red {
        Monomial lm;
        mpq_class lc;
        std::vector<Term> t;
    };
    std::vector<Red> reds;
    for (const auto& b : basis) {
        if (b.is_zero()) continue;
        Red r;
        r.t = b.terms();
        std::sort(r.t.begin(), r.t.end(),
                  [&](const Term& x, const Term& y) { return ord.greater(x.m, y.m); });
        r.lm = r.t.front().m;
        r.lc = r.t.front().c;
        reds.push_back(std::move(r));
    }
    std::vector<Term> p = f.terms();
    std::sort(p.begin(), p.end(),
              [&](const Term& x, const Term& y) { return ord.greater(x.m, y.m); });

    std::vector<Term> out;
    std::size_t fixed = 0;
    while (fixed < p.size()) {
        const Monomial& h = p[fixed].m;
        const Red* g = nullptr;
        for (const auto& r : reds)
            if (r.lm.divides(h)) {
                g = &r;
                break;
            }
        if (!g) {
            out.push_back(p[fixed]);
            ++fixed;
            continue;
        }
        budget.charge(p.size() - fixed + g->t.size());
        mpq_class q = p[fixed].c / g->lc;
        Monomial u = h.div(g->lm);
        // merge: p[fixed..] - q * u * g
        std::vector<Term> next;
        next.reserve(p.size() - fixed + g->t.size());
        std::size_t i = fixed, j = 0;
        while (i < p.size() && j < g->t.size()) {
            Monomial gm = g->t[j].m.mul(u);
            int c = ord.compare(p[i].m, gm);
            if (c > 0)
                next.push_back(p[i++]);
            else if (c < 0) {
                mpq_class v = -q * g->t[j].c;
                if (v != 0) next.push_back({gm, std::move(v)});
                ++j;
            } else {
                mpq_class v = p[i].c - q * g->t[j].c;
                if (v != 0) next.push_back({p[i].m, std::move(v)});
                ++i, ++j;
            }
        }
        for (; i < p.size(); ++i) next.push_back(p[i]);
        for (; j < g->t.size(); ++j) {
            mpq_class v = -q * g->t[j].c;
            if (v != 0) next.push_back({g->t[j].m.mul(u), std::move(v)});
        }
        p.erase(p.begin() + fixed, p.end());
        for (auto& t : next) p.push_back(std::move(t));
    }
    return Polynomial::from_terms(f.ctx(), std::move(out));
}

Monomial lead_monomial(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw_internal("lead of zero polynomial");
    const Monomial* best = &p.terms().front().m;
    for (const auto& t : p.terms())
        if (ord.greater(t.m, *best)) best = &t.m;
    return *best;
}

bool basis_is_unit(const std::vector<Polynomial>& basis) {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

}  // namespace euob
