#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "monomial.hpp"
#include "order.hpp"

namespace euob {

struct Term {
    Monomial m;
    mpq_class c;
};

// Canonical ordering used for storage and printing (grevlex over the whole
// variable list).  Independent of any elimination order a computation uses.
int canonical_cmp(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial with exact rational coefficients.  Terms are
// kept sorted descending in the canonical order with no zero coefficients.
// Value type; all operations return fresh polynomials.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(CtxPtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial constant(CtxPtr ctx, const mpq_class& c);
    static Polynomial variable(CtxPtr ctx, int var);
    static Polynomial from_terms(CtxPtr ctx, std::vector<Term> terms);

    const CtxPtr& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    int nterms() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& lead() const { return terms_.front(); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const mpq_class& c) const;
    Polynomial pow(unsigned k) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::uint32_t total_degree() const;      // zero polynomial -> 0
    std::uint32_t min_total_degree() const;  // order of vanishing at the origin
    bool homogeneous_in_span(int lo, int hi) const;
    bool uses_var(int var) const;

    Polynomial derivative(int var) const;
    mpq_class eval(const std::vector<mpq_class>& point) const;
    // simultaneous substitution var i -> images[i]; images must share ctx
    Polynomial compose(const std::vector<Polynomial>& images) const;
    Polynomial subst_var(int var, const Polynomial& value) const;
    // x_i -> x_i + shift_i over all variables
    Polynomial translate(const std::vector<mpq_class>& shift) const;
    // move to new_ctx sending var i to image[i] (-1 allowed only if i unused)
    Polynomial map_vars(const CtxPtr& new_ctx, const std::vector<int>& image) const;

    // integer coefficients with content 1 and positive canonical lead; zero stays zero
    Polynomial primitive() const;

    std::string str() const;

private:
    CtxPtr ctx_;
    std::vector<Term> terms_;
};

// Parses the +,-,*,^ syntax with integer or rational (p/q) coefficients.
// Variable names must exist in ctx; errors carry Status::Schema.
Polynomial parse_polynomial(const CtxPtr& ctx, const std::string& text);

// Identifier scan in first-appearance order, for building a context from a
// bare polynomial string.  Rejects the reserved leading underscore.
std::vector<std::string> scan_identifiers(const std::string& text);

}  // namespace euob
