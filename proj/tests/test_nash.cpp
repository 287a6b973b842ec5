#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "euob/euler.hpp"

using namespace euob;

namespace {

CtxPtr hyp_ctx(std::vector<std::string> vars) {
    return VarContext::make({{"x", std::move(vars), false}});
}

std::vector<mpq_class> origin(int n) { return std::vector<mpq_class>(n, 0); }

}  // namespace

TEST_CASE("graph closure: two routes agree") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y"});
    for (const char* src : {"x*y", "y^2 - x^3", "x^2 - y^2"}) {
        auto f = parse_polynomial(ctx, src);
        std::vector<Polynomial> grad = {f.derivative(0), f.derivative(1)};
        auto a = graph_closure(Ideal(ctx, {f}), grad, "_w", "_w", budget);
        auto b = graph_closure_by_saturation(Ideal(ctx, {f}), grad, "_w", "_w", budget);
        CAPTURE(src);
        CHECK(ideal_equal(ideal_map(a, b.ctx(), {0, 1, 2, 3}), b, budget));
    }
}

TEST_CASE("gauss graph of a smooth hypersurface pins the direction") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y", "z"});
    auto g = gauss_graph(parse_polynomial(ctx, "z"), budget);
    CHECK(g.n == 3);
    CHECK(g.d == 2);
    // gradient is constantly [0:0:1], so the graph ideal kills z, _g1, _g2
    auto expect = Ideal(g.ctx, {Polynomial::variable(g.ctx, 2), Polynomial::variable(g.ctx, 3),
                                Polynomial::variable(g.ctx, 4)});
    CHECK(ideal_equal(g.graph, expect, budget));
}

TEST_CASE("gauss graph rejects bad input") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y"});
    CHECK_THROWS_AS(gauss_graph(parse_polynomial(ctx, "7"), budget), Error);
    CHECK_THROWS_AS(gauss_graph(parse_polynomial(ctx, "x^2"), budget), Error);       // square
    CHECK_THROWS_AS(gauss_graph(parse_polynomial(ctx, "x^2*y + x^2"), budget), Error);
    // squarefree but singular is fine
    CHECK_NOTHROW(gauss_graph(parse_polynomial(ctx, "x*y"), budget));

    auto ctx1 = hyp_ctx({"x"});
    CHECK_THROWS_AS(gauss_graph(parse_polynomial(ctx1, "x"), budget), Error);
}

TEST_CASE("fiber of the cusp: length two at the vertical direction") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y"});
    auto g = gauss_graph(parse_polynomial(ctx, "y^2 - x^3"), budget);
    auto F = fiber_ideal(g, origin(2));

    // the fiber is a single thick point of length 2 in the direction block
    auto table = multidegrees(F, 7, budget);
    REQUIRE(table.entries.size() == 1);
    CHECK(table.entries[0].first == std::vector<int>{0, 0});
    CHECK(table.entries[0].second == 2);

    // supported at [0:1]: the gradient (-3x^2, 2y) flattens onto the y-axis,
    // so saturating away _g1 = 0 leaves nothing
    auto g1 = Polynomial::variable(g.ctx, 2);
    auto sat = saturate(F, Ideal(g.ctx, {g1}), budget);
    CHECK(contains_one(sat, budget));

    CHECK_THROWS_AS(fiber_ideal(g, {mpq_class(1), mpq_class(2)}), Error);
}

TEST_CASE("multidegrees of a graph mix affine and projective cuts") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y"});
    auto g = gauss_graph(parse_polynomial(ctx, "x*y"), budget);
    auto table = multidegrees(g.graph, 11, budget);
    // the graph is two affine lines, each with a constant direction
    REQUIRE(table.entries.size() == 2);
    CHECK(table.at({0, 1}) == 0);  // a generic point of P^1 misses both directions
    CHECK(table.at({1, 0}) == 2);  // an affine cut meets each line once
}

TEST_CASE("multidegrees reject an empty scheme") {
    Budget budget;
    auto ctx = VarContext::make({{"w", {"w1", "w2"}, true}});
    auto one = Ideal(ctx, {parse_polynomial(ctx, "w1"), parse_polynomial(ctx, "w2")});
    CHECK_THROWS_AS(multidegrees(one, 3, budget), Error);
}

TEST_CASE("a cut through an extra point trips the seed guard, never the count") {
    // line union point in the plane: a generic cut counts the line once, but
    // a cut through [1:1:1] picks up the extra point, and the three-variant
    // agreement check must catch that as a Seed error
    Budget budget;
    auto ctx = VarContext::make({{"w", {"w0", "w1", "w2"}, true}});
    auto w0 = Polynomial::variable(ctx, 0);
    auto w1 = Polynomial::variable(ctx, 1);
    auto w2 = Polynomial::variable(ctx, 2);
    auto I = intersect(Ideal(ctx, {w0}), Ideal(ctx, {w0 - w2, w1 - w2}), budget);

    int agreed = 0, tripped = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        try {
            auto table = multidegrees(I, seed, budget);
            CHECK(table.at({1}) == 1);
            ++agreed;
        } catch (const Error& e) {
            CHECK(e.status() == Status::Seed);
            ++tripped;
        }
    }
    CHECK(agreed + tripped == 100);
    CHECK(tripped > 0);
    CHECK(agreed > 80);
}

TEST_CASE("segre numbers of plane curve singularities") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y"});

    SUBCASE("node") {
        auto g = gauss_graph(parse_polynomial(ctx, "x*y"), budget);
        auto r = segre_fiber(g, origin(2), 5, budget);
        CHECK(r.segre.s == std::vector<long long>{2, 0});
        CHECK(r.segre.alternating_sum() == 2);
    }
    SUBCASE("cusp") {
        auto g = gauss_graph(parse_polynomial(ctx, "y^2 - x^3"), budget);
        auto r = segre_fiber(g, origin(2), 5, budget);
        CHECK(r.segre.s == std::vector<long long>{2, 0});
    }
    SUBCASE("smooth point of the cusp curve") {
        auto g = gauss_graph(parse_polynomial(ctx, "y^2 - x^3"), budget);
        auto r = segre_fiber(g, {mpq_class(1), mpq_class(1)}, 5, budget);
        CHECK(r.segre.s == std::vector<long long>{1, 0});
    }
    SUBCASE("tacnode-like tangent branches") {
        auto g = gauss_graph(parse_polynomial(ctx, "y^2 - x^4"), budget);
        auto r = segre_fiber(g, origin(2), 5, budget);
        CHECK(r.segre.alternating_sum() == 2);  // multiplicity of two tangent branches
    }
}

TEST_CASE("segre numbers of the quadric cone") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y", "z"});
    auto g = gauss_graph(parse_polynomial(ctx, "x^2 + y^2 + z^2"), budget);
    auto r = segre_fiber(g, origin(3), 5, budget);
    CHECK(r.segre.s == std::vector<long long>{2, 2, 0});
    CHECK(r.segre.alternating_sum() == 0);
}

TEST_CASE("segre vector is invariant under scaling and linear changes") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y"});
    auto f = parse_polynomial(ctx, "y^2 - x^3");
    auto base = segre_fiber(gauss_graph(f, budget), origin(2), 5, budget);

    auto scaled = segre_fiber(gauss_graph(f.scaled(3), budget), origin(2), 5, budget);
    CHECK(scaled.segre.s == base.segre.s);

    // x -> x + y, y -> y and x -> 2x - y, y -> x + y
    std::vector<std::vector<Polynomial>> changes = {
        {parse_polynomial(ctx, "x + y"), parse_polynomial(ctx, "y")},
        {parse_polynomial(ctx, "2*x - y"), parse_polynomial(ctx, "x + y")},
    };
    for (const auto& images : changes) {
        auto moved = segre_fiber(gauss_graph(f.compose(images), budget), origin(2), 5, budget);
        CHECK(moved.segre.s == base.segre.s);
    }
}

TEST_CASE("segre vector is stable across seeds") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y", "z"});
    auto g = gauss_graph(parse_polynomial(ctx, "x^2 + y^2 + z^2"), budget);
    auto a = segre_fiber(g, origin(3), 1, budget);
    auto b = segre_fiber(g, origin(3), 999, budget);
    auto c = segre_fiber(g, origin(3), 123456789, budget);
    CHECK(a.segre.s == b.segre.s);
    CHECK(a.segre.s == c.segre.s);
}

TEST_CASE("eu at points of plane curves equals multiplicity") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y"});
    struct Case {
        const char* f;
        std::vector<mpq_class> p;
        long long mult;
    };
    std::vector<Case> cases = {
        {"y^2 - x^3", {0, 0}, 2},       // cusp
        {"x*y", {0, 0}, 2},             // node
        {"y^3 - x^4", {0, 0}, 3},       // higher cusp
        {"x^2*y - y^3", {0, 0}, 3},     // three concurrent lines
        {"y^2 - x^5", {0, 0}, 2},       // ramphoid-type cusp
        {"y^2 - x^4", {0, 0}, 2},       // two tangent branches
        {"x*y", {0, 3}, 1},             // smooth point on a branch
    };
    for (const auto& c : cases) {
        CAPTURE(c.f);
        auto f = parse_polynomial(ctx, c.f);
        CHECK(multiplicity_at(f, c.p) == c.mult);
        CHECK(eu_at_point(f, c.p, 17, budget) == c.mult);
    }
}

TEST_CASE("eu is 1 at smooth points") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y", "z"});
    // z^2 - x*y is singular only at the origin; these points avoid it
    auto h = parse_polynomial(ctx, "z^2 - x*y");
    for (auto& p : std::vector<std::vector<mpq_class>>{
             {1, 1, 1}, {4, 1, 2}, {9, 1, 3}, {1, 4, -2}}) {
        CAPTURE(p[0].get_str());
        CHECK(eu_at_point(h, p, 23, budget) == 1);
    }
}

TEST_CASE("eu report runs the applicable cross checks") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y"});
    auto f = parse_polynomial(ctx, "x*y");
    auto factors = std::vector<Polynomial>{parse_polynomial(ctx, "x"), parse_polynomial(ctx, "y")};
    auto rep = eu_report(f, origin(2), factors, 31, budget);
    CHECK(rep.eu == 2);
    CHECK_FALSE(rep.failing);
    bool saw_mult = false, saw_add = false;
    for (const auto& c : rep.checks) {
        if (c.name == "plane-curve-multiplicity") saw_mult = true;
        if (c.name == "factor-additivity") {
            saw_add = true;
            CHECK(c.expected == 2);
        }
        CHECK(c.pass);
    }
    CHECK(saw_mult);
    CHECK(saw_add);

    auto bad = std::vector<Polynomial>{parse_polynomial(ctx, "x"), parse_polynomial(ctx, "x + y")};
    CHECK_THROWS_AS(eu_report(f, origin(2), bad, 31, budget), Error);
}

TEST_CASE("cylinder reduction check fires for a product with a line") {
    Budget budget;
    auto ctx = hyp_ctx({"x", "y", "z"});
    auto f = parse_polynomial(ctx, "y^2 - x^3");  // z is unused
    auto rep = eu_report(f, origin(3), {}, 41, budget);
    CHECK(rep.eu == 2);
    bool saw = false;
    for (const auto& c : rep.checks)
        if (c.name == "cylinder-reduction") {
            saw = true;
            CHECK(c.expected == 2);
            CHECK(c.pass);
        }
    CHECK(saw);
    CHECK_FALSE(rep.failing);

    // the same cylinder away from the z-axis point
    auto rep2 = eu_report(f, {mpq_class(0), mpq_class(0), mpq_class(5)}, {}, 41, budget);
    CHECK(rep2.eu == 2);
}
