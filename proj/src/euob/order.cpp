#include "order.hpp"

namespace euob {

namespace {

// grevlex on a span: higher degree wins; ties broken by the last differing
// exponent, smaller exponent wins.
int cmp_grevlex_span(const Monomial& a, const Monomial& b, int lo, int hi) {
    std::uint32_t da = a.deg_span(lo, hi), db = b.deg_span(lo, hi);
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

MonomialOrder MonomialOrder::grevlex(const CtxPtr& ctx) {
    MonomialOrder o;
    o.kind_ = Kind::Grevlex;
    o.nvars_ = ctx->nvars();
    return o;
}

MonomialOrder MonomialOrder::lex(const CtxPtr& ctx) {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    o.nvars_ = ctx->nvars();
    return o;
}

MonomialOrder MonomialOrder::block(const CtxPtr& ctx) {
    MonomialOrder o;
    o.kind_ = Kind::Block;
    o.nvars_ = ctx->nvars();
    for (const auto& b : ctx->blocks()) o.spans_.emplace_back(b.lo, b.hi);
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Grevlex:
            if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
            return cmp_grevlex_span(a, b, 0, nvars_);
        case Kind::Lex:
            for (int i = 0; i < nvars_; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        case Kind::Block:
            for (auto [lo, hi] : spans_) {
                int c = cmp_grevlex_span(a, b, lo, hi);
                if (c) return c;
            }
            return 0;
    }
    return 0;
}

}  // namespace euob
