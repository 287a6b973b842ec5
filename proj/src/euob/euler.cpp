#include "euler.hpp"

namespace euob {

long long multiplicity_at(const Polynomial& f, const std::vector<mpq_class>& point) {
    if (f.is_zero()) throw_validation("multiplicity of the zero polynomial");
    return static_cast<long long>(f.translate(point).min_total_degree());
}

long long eu_at_point(const Polynomial& f, const std::vector<mpq_class>& point,
                      std::uint64_t seed, Budget& budget) {
    GaussGraph g = gauss_graph(f, budget);
    return segre_fiber(g, point, seed, budget).segre.alternating_sum();
}

namespace {

bool gradient_nonzero_at(const Polynomial& f, const std::vector<mpq_class>& point) {
    for (int i = 0; i < f.ctx()->nvars(); ++i)
        if (f.derivative(i).eval(point) != 0) return true;
    return false;
}

}  // namespace

EuReport eu_report(const Polynomial& f, const std::vector<mpq_class>& point,
                   const std::vector<Polynomial>& factors, std::uint64_t seed, Budget& budget) {
    EuReport rep;
    rep.poly = f.str();
    rep.point = point;

    GaussGraph g = gauss_graph(f, budget);
    SegreResult sr = segre_fiber(g, point, seed, budget);
    rep.segre = sr.segre;
    rep.table = sr.table;
    rep.eu = sr.segre.alternating_sum();
    rep.multiplicity = multiplicity_at(f, point);

    auto add_check = [&](const std::string& name, long long expected, long long got) {
        EuCheck c{name, expected, got, expected == got};
        rep.failing = rep.failing || !c.pass;
        rep.checks.push_back(std::move(c));
    };

    if (gradient_nonzero_at(f, point)) add_check("smooth-point", 1, rep.eu);
    if (g.n == 2) add_check("plane-curve-multiplicity", rep.multiplicity, rep.eu);

    // cylinder reduction: variables missing from f split off a smooth factor
    // that cannot change the local obstruction
    {
        std::vector<int> used;
        for (int i = 0; i < g.n; ++i)
            if (f.uses_var(i)) used.push_back(i);
        if (static_cast<int>(used.size()) >= 2 && static_cast<int>(used.size()) < g.n) {
            std::vector<std::string> names;
            for (int i : used) names.push_back(f.ctx()->var_name(i));
            CtxPtr small = VarContext::make({{f.ctx()->block(0).name, names, false}});
            std::vector<int> image(g.n, -1);
            for (std::size_t k = 0; k < used.size(); ++k) image[used[k]] = static_cast<int>(k);
            Polynomial fs = f.map_vars(small, image);
            std::vector<mpq_class> ps;
            for (int i : used) ps.push_back(point[i]);
            add_check("cylinder-reduction", eu_at_point(fs, ps, seed, budget), rep.eu);
        }
    }

    if (!factors.empty()) {
        Polynomial prod = Polynomial::constant(f.ctx(), 1);
        for (const auto& h : factors) prod = prod * h;
        // factors must multiply to f up to a nonzero scalar
        if (prod.is_zero() || f.primitive() != prod.primitive())
            throw_validation("factors do not multiply to the polynomial");
        long long total = 0;
        for (const auto& h : factors)
            if (h.eval(point) == 0) total += eu_at_point(h, point, seed, budget);
        add_check("factor-additivity", total, rep.eu);
    }
    return rep;
}

}  // namespace euob
