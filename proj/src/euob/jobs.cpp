#include "jobs.hpp"

#include <json.hpp>
#include <sstream>

#include "behrend.hpp"
#include "euler.hpp"

namespace euob {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// ---- document access, every misstep is a schema error ----

json parse_doc(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw_schema(std::string("document is not valid JSON: ") + e.what());
    }
}

void allow_keys(const json& obj, const char* where, std::initializer_list<const char*> keys) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known = known || it.key() == k;
        if (!known) throw_schema(std::string("unknown field '") + it.key() + "' in " + where);
    }
}

const json& field(const json& obj, const char* name) {
    auto it = obj.find(name);
    if (it == obj.end()) throw_schema(std::string("missing field '") + name + "'");
    return *it;
}

std::string str_field(const json& obj, const char* name) {
    const json& v = field(obj, name);
    if (!v.is_string()) throw_schema(std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

long long int_field(const json& obj, const char* name) {
    const json& v = field(obj, name);
    if (!v.is_number_integer()) throw_schema(std::string("field '") + name + "' must be an integer");
    return v.get<long long>();
}

mpq_class rational_from(const json& v, const char* where) {
    if (v.is_number_integer()) return mpq_class(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        try {
            mpq_class q(v.get<std::string>());
            if (q.get_den() == 0) throw_schema(std::string(where) + ": zero denominator");
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw_schema(std::string(where) + ": '" + v.get<std::string>() +
                         "' is not a rational number");
        }
    }
    throw_schema(std::string(where) + " must be an integer or a rational string");
}

std::vector<long long> int_vector(const json& v, const char* where) {
    if (!v.is_array()) throw_schema(std::string(where) + " must be an array of integers");
    std::vector<long long> out;
    for (const auto& x : v) {
        if (!x.is_number_integer())
            throw_schema(std::string(where) + " must contain only integers");
        out.push_back(x.get<long long>());
    }
    return out;
}

// ---- shared builders ----

struct PolySetup {
    CtxPtr ctx;
    Polynomial f;
    std::vector<mpq_class> point;
};

PolySetup poly_setup(const json& doc) {
    const json& vars = field(doc, "vars");
    if (!vars.is_array() || vars.empty())
        throw_schema("field 'vars' must be a nonempty array of names");
    std::vector<std::string> names;
    for (const auto& v : vars) {
        if (!v.is_string()) throw_schema("field 'vars' must contain only strings");
        names.push_back(v.get<std::string>());
    }
    PolySetup s;
    s.ctx = VarContext::make({{"x", names, false}});
    s.f = parse_polynomial(s.ctx, str_field(doc, "poly"));
    const json& pt = field(doc, "point");
    if (!pt.is_array() || pt.size() != names.size())
        throw_schema("field 'point' must list one coordinate per variable");
    for (const auto& c : pt) s.point.push_back(rational_from(c, "point coordinate"));
    return s;
}

StratifiedSpace space_from(const json& doc) {
    const json& sp = field(doc, "space");
    if (!sp.is_object()) throw_schema("field 'space' must be an object");
    allow_keys(sp, "space", {"strata", "covers", "obstructions"});
    const json& strata = field(sp, "strata");
    if (!strata.is_array() || strata.empty())
        throw_schema("space needs a nonempty 'strata' array");
    std::vector<Stratum> list;
    for (const auto& s : strata) {
        if (!s.is_object()) throw_schema("each stratum must be an object");
        allow_keys(s, "stratum", {"name", "dim", "chi", "fixed"});
        Stratum st;
        st.name = str_field(s, "name");
        st.dim = static_cast<int>(int_field(s, "dim"));
        st.chi = int_field(s, "chi");
        if (s.contains("fixed")) {
            if (!s["fixed"].is_boolean()) throw_schema("stratum field 'fixed' must be a boolean");
            st.fixed = s["fixed"].get<bool>();
        }
        list.push_back(std::move(st));
    }
    std::vector<std::pair<std::string, std::string>> covers;
    if (sp.contains("covers")) {
        if (!sp["covers"].is_array()) throw_schema("space field 'covers' must be an array");
        for (const auto& c : sp["covers"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
                throw_schema("each cover must be a pair of stratum names");
            covers.push_back({c[0].get<std::string>(), c[1].get<std::string>()});
        }
    }
    return StratifiedSpace::make(std::move(list), covers);
}

EuMatrix matrix_from(const json& doc, const StratifiedSpace& X) {
    const json& sp = field(doc, "space");
    if (!sp.contains("obstructions")) return EuMatrix::smooth_closures(X);
    const json& obs = sp["obstructions"];
    if (!obs.is_array()) throw_schema("space field 'obstructions' must be an array");
    std::vector<std::tuple<std::string, std::string, long long>> entries;
    for (const auto& o : obs) {
        if (!o.is_array() || o.size() != 3 || !o[0].is_string() || !o[1].is_string() ||
            !o[2].is_number_integer())
            throw_schema("each obstruction entry must be [stratum, stratum, integer]");
        entries.push_back({o[0].get<std::string>(), o[1].get<std::string>(),
                           o[2].get<long long>()});
    }
    return EuMatrix::from_entries(X, entries);
}

std::vector<ConeComponent> cone_from(const json& doc) {
    const json& cone = field(doc, "cone");
    if (!cone.is_array()) throw_schema("field 'cone' must be an array of components");
    std::vector<ConeComponent> comps;
    for (const auto& c : cone) {
        if (!c.is_object()) throw_schema("each cone component must be an object");
        allow_keys(c, "cone component", {"support", "dim", "mult"});
        ConeComponent cc;
        cc.support = str_field(c, "support");
        cc.dim = static_cast<int>(int_field(c, "dim"));
        cc.mult = c.contains("mult") ? int_field(c, "mult") : 1;
        comps.push_back(std::move(cc));
    }
    return comps;
}

std::vector<TangentDecl> tangents_from(const json& doc) {
    std::vector<TangentDecl> out;
    if (!doc.contains("tangents")) return out;
    const json& ts = doc["tangents"];
    if (!ts.is_array()) throw_schema("field 'tangents' must be an array");
    for (const auto& t : ts) {
        if (!t.is_object()) throw_schema("each tangent declaration must be an object");
        allow_keys(t, "tangent declaration", {"stratum", "dim"});
        out.push_back({str_field(t, "stratum"), static_cast<int>(int_field(t, "dim"))});
    }
    return out;
}

// ---- report assembly ----

ordered_json point_json(const std::vector<mpq_class>& pt) {
    ordered_json arr = ordered_json::array();
    for (const auto& q : pt) arr.push_back(q.get_str());
    return arr;
}

ordered_json table_json(const MultidegreeTable& t) {
    ordered_json out;
    out["blocks"] = t.block_names;
    ordered_json entries = ordered_json::array();
    for (const auto& [key, value] : t.entries) {
        ordered_json e;
        e["key"] = key;
        e["value"] = value;
        entries.push_back(std::move(e));
    }
    out["entries"] = std::move(entries);
    return out;
}

template <class Check>
ordered_json checks_json(const std::vector<Check>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json e;
        e["name"] = c.name;
        e["expected"] = c.expected;
        e["got"] = c.got;
        e["pass"] = c.pass;
        arr.push_back(std::move(e));
    }
    return arr;
}

template <class Check>
void render_checks(std::ostringstream& os, const std::vector<Check>& checks) {
    for (const auto& c : checks)
        os << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name << " (expected " << c.expected
           << ", got " << c.got << ")\n";
}

std::string render_vector(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

ordered_json names_json(const StratifiedSpace& X) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < X.count(); ++i) arr.push_back(X.at(i).name);
    return arr;
}

// ---- job runners ----

JobOutput finish(ordered_json& out, const std::ostringstream& text) {
    JobOutput r;
    r.json = out.dump(2);
    r.text = text.str();
    return r;
}

JobOutput run_eu(const json& doc, std::uint64_t seed, Budget& budget, bool segre_only) {
    auto s = poly_setup(doc);
    std::vector<Polynomial> factors;
    if (doc.contains("factors")) {
        const json& fs = doc["factors"];
        if (!fs.is_array()) throw_schema("field 'factors' must be an array of polynomials");
        for (const auto& f : fs) {
            if (!f.is_string()) throw_schema("field 'factors' must contain only strings");
            factors.push_back(parse_polynomial(s.ctx, f.get<std::string>()));
        }
    }

    ordered_json out;
    std::ostringstream text;
    if (segre_only) {
        auto g = gauss_graph(s.f, budget);
        auto r = segre_fiber(g, s.point, seed, budget);
        out["kind"] = "segre";
        out["seed"] = seed;
        out["poly"] = s.f.str();
        out["point"] = point_json(s.point);
        out["segre"] = r.segre.s;
        out["multidegrees"] = table_json(r.table);
        text << "poly: " << s.f.str() << "\n";
        text << "segre: " << render_vector(r.segre.s) << "\n";
        text << "alternating sum: " << r.segre.alternating_sum() << "\n";
        return finish(out, text);
    }

    auto rep = eu_report(s.f, s.point, factors, seed, budget);
    out["kind"] = "eu";
    out["seed"] = seed;
    out["poly"] = rep.poly;
    out["point"] = point_json(rep.point);
    out["eu"] = rep.eu;
    out["multiplicity"] = rep.multiplicity;
    out["segre"] = rep.segre.s;
    out["multidegrees"] = table_json(rep.table);
    out["checks"] = checks_json(rep.checks);
    out["all_pass"] = !rep.failing;

    text << "poly: " << rep.poly << "\n";
    text << "multiplicity: " << rep.multiplicity << "\n";
    text << "segre: " << render_vector(rep.segre.s) << "\n";
    text << "eu: " << rep.eu << "\n";
    render_checks(text, rep.checks);
    text << (rep.failing ? "cross-checks FAILED\n" : "all cross-checks pass\n");
    return finish(out, text);
}

JobOutput run_transform(const json& doc, const char* kind) {
    auto X = space_from(doc);
    auto e = matrix_from(doc, X);
    bool has_values = doc.contains("values"), has_coeffs = doc.contains("coeffs");
    if (has_values == has_coeffs)
        throw_schema("provide exactly one of 'values' or 'coeffs'");

    std::vector<long long> values, coeffs;
    if (has_values) {
        values = int_vector(doc["values"], "'values'");
        coeffs = inverse_transform(X, e, values);
    } else {
        coeffs = int_vector(doc["coeffs"], "'coeffs'");
        values = eu_transform(X, e, coeffs);
    }
    long long chi = weighted_chi(X, e, values);

    ordered_json out;
    out["kind"] = kind;
    out["strata"] = names_json(X);
    out["values"] = values;
    out["coeffs"] = coeffs;
    out["chi"] = chi;

    std::ostringstream text;
    text << "strata: ";
    for (int i = 0; i < X.count(); ++i) text << (i ? " " : "") << X.at(i).name;
    text << "\nvalues on strata: " << render_vector(values) << "\n";
    text << "obstruction-basis coefficients: " << render_vector(coeffs) << "\n";
    text << "weighted chi: " << chi << "\n";
    return finish(out, text);
}

JobOutput run_behrend(const json& doc) {
    auto X = space_from(doc);
    auto e = matrix_from(doc, X);
    auto r = behrend_weights(X, e, cone_from(doc));

    ordered_json out;
    out["kind"] = "behrend";
    out["strata"] = names_json(X);
    out["signed_mult"] = r.signed_mult;
    out["cone_values"] = r.cone_values;
    out["nu"] = r.nu;
    out["dt"] = r.dt;

    std::ostringstream text;
    text << "cone class on strata: " << render_vector(r.cone_values) << "\n";
    text << "local weights nu: " << render_vector(r.nu) << "\n";
    text << "weighted count: " << r.dt << "\n";
    return finish(out, text);
}

ordered_json comps_json(const std::vector<ConeComponent>& comps) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : comps) {
        ordered_json e;
        e["support"] = c.support;
        e["dim"] = c.dim;
        e["mult"] = c.mult;
        arr.push_back(std::move(e));
    }
    return arr;
}

JobOutput run_kiemli(const json& doc) {
    auto X = space_from(doc);
    auto e = matrix_from(doc, X);
    auto r = kiem_li_localized(X, e, cone_from(doc), tangents_from(doc));

    ordered_json out;
    out["kind"] = "kiemli";
    out["strata"] = names_json(X);
    out["fixed_part"] = comps_json(r.fixed_part);
    out["moving_part"] = comps_json(r.moving_part);
    out["nu_fixed"] = r.nu_fixed;
    out["nu_moving"] = r.nu_moving;
    out["chi_fixed"] = r.chi_fixed;
    out["chi_moving"] = r.chi_moving;
    out["dt_global"] = r.dt_global;
    out["dt_localized"] = r.dt_localized;
    out["checks"] = checks_json(r.checks);
    out["all_pass"] = r.all_pass;

    std::ostringstream text;
    text << "fixed-part components: " << r.fixed_part.size()
         << ", moving-part components: " << r.moving_part.size() << "\n";
    text << "contribution over the fixed locus: fixed " << r.chi_fixed << ", moving "
         << r.chi_moving << "\n";
    text << "global count: " << r.dt_global << "\n";
    text << "localized count: " << r.dt_localized << "\n";
    render_checks(text, r.checks);
    text << (r.all_pass ? "all checks pass\n" : "checks FAILED\n");
    return finish(out, text);
}

JobOutput run_selftest(std::uint64_t seed, Budget& budget) {
    std::vector<BehrendCheck> checks;
    auto push = [&](const std::string& name, long long expected, long long got) {
        checks.push_back({name, expected, got, expected == got});
    };

    auto c2 = VarContext::make({{"x", {"x", "y"}, false}});
    push("node of the plane curve xy counts its branches", 2,
         eu_at_point(parse_polynomial(c2, "x*y"), {0, 0}, seed, budget));

    auto c3 = VarContext::make({{"x", {"x", "y", "z"}, false}});
    push("quadric cone vertex flattens to zero", 0,
         eu_at_point(parse_polynomial(c3, "x*y - z^2"), {0, 0, 0}, seed, budget));

    auto line = StratifiedSpace::make({{"O", 0, 1, true}, {"U", 1, 0, false}}, {{"O", "U"}});
    auto e = EuMatrix::smooth_closures(line);
    auto kl = kiem_li_localized(line, e, {{"U", 1, 1}}, {{"O", 1}});
    push("expanding cone over the line counts minus one", -1, kl.dt_localized);
    push("localization agrees with the global count", kl.dt_global, kl.dt_localized);

    std::vector<long long> sample{3, -2};
    push("transform round trip returns the input", 1,
         inverse_transform(line, e, eu_transform(line, e, sample)) == sample ? 1 : 0);

    bool all = true;
    for (const auto& c : checks) all = all && c.pass;

    ordered_json out;
    out["kind"] = "selftest";
    out["seed"] = seed;
    out["checks"] = checks_json(checks);
    out["all_pass"] = all;

    std::ostringstream text;
    render_checks(text, checks);
    text << (all ? "selftest pass\n" : "selftest FAILED\n");
    return finish(out, text);
}

}  // namespace

JobOutput run_job(const std::string& document, const JobDefaults& defaults) {
    json doc = parse_doc(document);
    if (!doc.is_object()) throw_schema("document must be a JSON object");
    std::string kind = str_field(doc, "kind");

    std::uint64_t seed = defaults.seed;
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_integer() || doc["seed"].get<long long>() < 0)
            throw_schema("field 'seed' must be a nonnegative integer");
        seed = doc["seed"].get<std::uint64_t>();
    }
    Budget budget(defaults.budget);
    if (doc.contains("budget")) {
        long long b = int_field(doc, "budget");
        if (b <= 0) throw_schema("field 'budget' must be a positive integer");
        budget.limit = static_cast<std::uint64_t>(b);
    }

    if (kind == "eu" || kind == "segre") {
        allow_keys(doc, "document",
                   {"kind", "seed", "budget", "vars", "poly", "point", "factors"});
        if (kind == "segre" && doc.contains("factors"))
            throw_schema("'factors' only applies to eu jobs");
        return run_eu(doc, seed, budget, kind == "segre");
    }
    if (kind == "strat-chi" || kind == "transform") {
        allow_keys(doc, "document", {"kind", "seed", "budget", "space", "values", "coeffs"});
        return run_transform(doc, kind.c_str());
    }
    if (kind == "behrend") {
        allow_keys(doc, "document", {"kind", "seed", "budget", "space", "cone"});
        return run_behrend(doc);
    }
    if (kind == "kiemli") {
        allow_keys(doc, "document", {"kind", "seed", "budget", "space", "cone", "tangents"});
        return run_kiemli(doc);
    }
    if (kind == "selftest") {
        allow_keys(doc, "document", {"kind", "seed", "budget"});
        return run_selftest(seed, budget);
    }
    throw_schema("unknown job kind '" + kind + "'");
}

}  // namespace euob
