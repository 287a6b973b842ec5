#include "polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace euob {

int canonical_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = kMaxVars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

namespace {

void sort_combine(std::vector<Term>& t) {
    std::sort(t.begin(), t.end(),
              [](const Term& a, const Term& b) { return canonical_cmp(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(t.size());
    for (auto& tm : t) {
        if (!out.empty() && out.back().m == tm.m)
            out.back().c += tm.c;
        else
            out.push_back(std::move(tm));
    }
    std::erase_if(out, [](const Term& x) { return x.c == 0; });
    t = std::move(out);
}

void check_ctx(const Polynomial& a, const Polynomial& b) {
    if (a.ctx() && b.ctx() && a.ctx() != b.ctx())
        throw_internal("mixing polynomials from different variable contexts");
}

}  // namespace

Polynomial Polynomial::constant(CtxPtr ctx, const mpq_class& c) {
    Polynomial p(std::move(ctx));
    if (c != 0) p.terms_.push_back({Monomial::one(), c});
    return p;
}

Polynomial Polynomial::variable(CtxPtr ctx, int var) {
    Polynomial p(std::move(ctx));
    p.terms_.push_back({Monomial::var(var), 1});
    return p;
}

Polynomial Polynomial::from_terms(CtxPtr ctx, std::vector<Term> terms) {
    Polynomial p(std::move(ctx));
    sort_combine(terms);
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ctx(*this, o);
    Polynomial r(ctx_ ? ctx_ : o.ctx_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = canonical_cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            mpq_class s = terms_[i].c + o.terms_[j].c;
            if (s != 0) r.terms_.push_back({terms_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ctx(*this, o);
    Polynomial r(ctx_ ? ctx_ : o.ctx_);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc.push_back({a.m.mul(b.m), a.c * b.c});
    sort_combine(acc);
    r.terms_ = std::move(acc);
    return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    Polynomial r(ctx_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = Polynomial::constant(ctx_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::uint32_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.front().m.deg;
}

std::uint32_t Polynomial::min_total_degree() const {
    std::uint32_t d = 0;
    bool first = true;
    for (const auto& t : terms_) {
        if (first || t.m.deg < d) d = t.m.deg;
        first = false;
    }
    return d;
}

bool Polynomial::homogeneous_in_span(int lo, int hi) const {
    if (terms_.empty()) return true;
    std::uint32_t d = terms_.front().m.deg_span(lo, hi);
    for (const auto& t : terms_)
        if (t.m.deg_span(lo, hi) != d) return false;
    return true;
}

bool Polynomial::uses_var(int var) const {
    for (const auto& t : terms_)
        if (t.m.e[var]) return true;
    return false;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(ctx_);
    for (const auto& t : terms_) {
        unsigned k = t.m.e[var];
        if (!k) continue;
        Term d;
        d.m = t.m;
        d.m.e[var] -= 1;
        d.m.deg -= 1;
        d.c = t.c * k;
        r.terms_.push_back(std::move(d));
    }
    return r;
}

mpq_class Polynomial::eval(const std::vector<mpq_class>& point) const {
    if (static_cast<int>(point.size()) != ctx_->nvars())
        throw_schema("point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(ctx_->nvars()));
    mpq_class total = 0;
    for (const auto& t : terms_) {
        mpq_class v = t.c;
        for (int i = 0; i < ctx_->nvars(); ++i)
            for (unsigned k = 0; k < t.m.e[i]; ++k) v *= point[i];
        total += v;
    }
    return total;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ctx_->nvars())
        throw_internal("compose: wrong image count");
    // cache powers per variable as needed
    std::vector<std::vector<Polynomial>> pows(images.size());
    auto power = [&](int v, unsigned k) -> const Polynomial& {
        auto& cache = pows[v];
        if (cache.empty()) cache.push_back(Polynomial::constant(images[v].ctx(), 1));
        while (cache.size() <= k) cache.push_back(cache.back() * images[v]);
        return cache[k];
    };
    Polynomial total(images.empty() ? ctx_ : images[0].ctx());
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(total.ctx(), t.c);
        for (int v = 0; v < ctx_->nvars(); ++v)
            if (t.m.e[v]) prod = prod * power(v, t.m.e[v]);
        total = total + prod;
    }
    return total;
}

Polynomial Polynomial::subst_var(int var, const Polynomial& value) const {
    std::vector<Polynomial> images;
    images.reserve(ctx_->nvars());
    for (int i = 0; i < ctx_->nvars(); ++i)
        images.push_back(i == var ? value : Polynomial::variable(ctx_, i));
    return compose(images);
}

Polynomial Polynomial::translate(const std::vector<mpq_class>& shift) const {
    if (static_cast<int>(shift.size()) != ctx_->nvars())
        throw_schema("shift has wrong coordinate count");
    std::vector<Polynomial> images;
    images.reserve(ctx_->nvars());
    for (int i = 0; i < ctx_->nvars(); ++i)
        images.push_back(Polynomial::variable(ctx_, i) + Polynomial::constant(ctx_, shift[i]));
    return compose(images);
}

Polynomial Polynomial::map_vars(const CtxPtr& new_ctx, const std::vector<int>& image) const {
    Polynomial r(new_ctx);
    std::vector<Term> acc;
    acc.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt;
        nt.c = t.c;
        for (int i = 0; i < ctx_->nvars(); ++i) {
            if (!t.m.e[i]) continue;
            if (image[i] < 0) throw_internal("map_vars drops a used variable");
            nt.m.e[image[i]] = static_cast<std::uint8_t>(nt.m.e[image[i]] + t.m.e[i]);
            nt.m.deg += t.m.e[i];
        }
        acc.push_back(std::move(nt));
    }
    sort_combine(acc);
    r.terms_ = std::move(acc);
    return r;
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;
    // content = gcd(numerators) / lcm(denominators); dividing by it clears
    // denominators and makes integer coefficients coprime
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_class n = t.c.get_num(), d = t.c.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    if (terms_.front().c < 0) content = -content;
    Polynomial r(ctx_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
        t.c /= content;
        t.c.canonicalize();
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        mpq_class a = abs(t.c);
        bool neg = t.c < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (int i = 0; i < ctx_->nvars(); ++i) {
            if (!t.m.e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->var_name(i);
            if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
        }
        if (mono.empty()) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        char c = peek();
        if (pos < s.size()) ++pos;
        return c;
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
};

class Parser {
public:
    Parser(const CtxPtr& ctx, const std::string& text) : ctx_(ctx), lex_{text} {}

    Polynomial run() {
        Polynomial p = expr();
        if (lex_.peek() != '\0')
            throw_schema("unexpected character '" + std::string(1, lex_.peek()) +
                         "' in polynomial");
        return p;
    }

private:
    CtxPtr ctx_;
    Lexer lex_;

    Polynomial expr() {
        bool neg = false;
        if (lex_.eat('-'))
            neg = true;
        else
            lex_.eat('+');
        Polynomial p = term();
        if (neg) p = -p;
        for (;;) {
            if (lex_.eat('+'))
                p = p + term();
            else if (lex_.eat('-'))
                p = p - term();
            else
                break;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (lex_.eat('*')) p = p * factor();
        return p;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (lex_.eat('^')) {
            std::string d = lex_.digits();
            if (d.empty()) throw_schema("expected exponent after '^'");
            long k = std::stol(d);
            if (k < 0 || k > 255) throw_schema("exponent out of range");
            b = b.pow(static_cast<unsigned>(k));
        }
        return b;
    }

    Polynomial base() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.take();
            Polynomial p = expr();
            if (!lex_.eat(')')) throw_schema("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex_.digits();
            if (lex_.eat('/')) {
                std::string den = lex_.digits();
                if (den.empty()) throw_schema("expected denominator after '/'");
                mpq_class q(num + "/" + den);
                if (q.get_den() == 0) throw_schema("zero denominator");
                q.canonicalize();
                return Polynomial::constant(ctx_, q);
            }
            return Polynomial::constant(ctx_, mpq_class(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lex_.ident();
            int v = ctx_->var_index(name);
            if (v < 0) throw_schema("unknown variable '" + name + "'");
            return Polynomial::variable(ctx_, v);
        }
        if (c == '\0') throw_schema("polynomial text ended unexpectedly");
        throw_schema("unexpected character '" + std::string(1, c) + "' in polynomial");
    }
};

}  // namespace

Polynomial parse_polynomial(const CtxPtr& ctx, const std::string& text) {
    return Parser(ctx, text).run();
}

std::vector<std::string> scan_identifiers(const std::string& text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isalpha(c) || c == '_') {
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_'))
                ++i;
            std::string name = text.substr(start, i - start);
            if (name[0] == '_')
                throw_schema("variable names starting with '_' are reserved: '" + name + "'");
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        } else {
            ++i;
        }
    }
    return out;
}

}  // namespace euob
