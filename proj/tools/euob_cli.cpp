#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "euob.h"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kUsageError = EUOB_ERR_SCHEMA;

struct EngineDeleter {
    void operator()(euob_engine* e) const { euob_engine_free(e); }
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        std::exit(kUsageError);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// file contents parsed early so flag mistakes surface as CLI errors, not as
// engine schema failures deep in a run
json parse_file(const std::string& path, const char* what) {
    try {
        return json::parse(slurp(path));
    } catch (const json::exception& e) {
        std::cerr << "error: " << what << " file " << path << " is not valid JSON: " << e.what()
                  << "\n";
        std::exit(kUsageError);
    }
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

ordered_json csv_ints(const std::string& s, const char* flag) {
    ordered_json arr = ordered_json::array();
    for (const auto& part : split_csv(s)) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            arr.push_back(v);
        } catch (const std::exception&) {
            std::cerr << "error: " << flag << " expects comma-separated integers, got '" << part
                      << "'\n";
            std::exit(kUsageError);
        }
    }
    return arr;
}

int run_document(const std::string& doc, uint64_t seed, uint64_t budget, bool as_json) {
    std::unique_ptr<euob_engine, EngineDeleter> engine(euob_engine_new());
    if (!engine) {
        std::cerr << "error: engine allocation failed\n";
        return EUOB_ERR_INTERNAL;
    }
    euob_engine_set_seed(engine.get(), seed);
    if (budget > 0) euob_engine_set_budget(engine.get(), budget);

    char* out = nullptr;
    int status = as_json ? euob_run_job_json(engine.get(), doc.c_str(), &out)
                         : euob_run_job_text(engine.get(), doc.c_str(), &out);
    if (status != EUOB_OK) {
        std::cerr << "error: " << euob_last_error(engine.get()) << "\n";
        return status;
    }
    std::fputs(out, stdout);
    if (as_json) std::fputc('\n', stdout);
    euob_string_free(out);
    return EUOB_OK;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local obstruction numbers and weighted counts of stratified spaces"};
    app.set_version_flag("--version", euob_version());
    app.require_subcommand(1);

    uint64_t seed = 42;
    uint64_t budget = 0;
    bool as_json = false;
    app.add_option("--seed", seed, "seed for the generic slicing draws")->capture_default_str();
    app.add_option("--budget", budget, "computation budget in abstract work units");
    app.add_flag("--json", as_json, "print the canonical JSON report instead of text");

    std::string vars, poly, point, values, coeffs, space_path, cone_path, fixed;
    std::vector<std::string> factors, tangents;

    auto add_poly_flags = [&](CLI::App* cmd) {
        cmd->add_option("--vars", vars, "comma-separated variable names")->required();
        cmd->add_option("--poly", poly, "hypersurface polynomial")->required();
        cmd->add_option("--point", point, "comma-separated rational coordinates")->required();
    };

    auto* cmd_eu = app.add_subcommand("eu", "local obstruction number at a point");
    add_poly_flags(cmd_eu);
    cmd_eu->add_option("--factor", factors,
                       "known factor of the polynomial, repeat per factor; "
                       "enables the additivity cross-check");

    auto* cmd_segre = app.add_subcommand("segre", "Segre numbers of the Nash-fiber at a point");
    add_poly_flags(cmd_segre);

    auto add_space_flag = [&](CLI::App* cmd) {
        cmd->add_option("--space", space_path,
                        "JSON file with {strata, covers, obstructions}")
            ->required();
        cmd->add_option("--fixed", fixed,
                        "comma-separated stratum names to mark as torus-fixed");
    };

    auto* cmd_chi = app.add_subcommand("strat-chi", "weighted Euler characteristic");
    add_space_flag(cmd_chi);
    cmd_chi->add_option("--function,--values", values,
                        "comma-separated values on the strata");
    cmd_chi->add_option("--coeffs", coeffs,
                        "comma-separated coefficients in the obstruction basis");

    auto* cmd_tr = app.add_subcommand("transform",
                                      "convert between stratum values and obstruction basis");
    add_space_flag(cmd_tr);
    cmd_tr->add_option("--values", values, "comma-separated values on the strata");
    cmd_tr->add_option("--coeffs", coeffs,
                       "comma-separated coefficients in the obstruction basis");

    auto* cmd_be = app.add_subcommand("behrend", "weigh a cone over the space and count");
    add_space_flag(cmd_be);
    cmd_be->add_option("--cone", cone_path, "JSON file with the cone components")->required();

    auto* cmd_kl = app.add_subcommand("kiemli", "localize the count to the fixed locus");
    add_space_flag(cmd_kl);
    cmd_kl->add_option("--cone", cone_path, "JSON file with the cone components")->required();
    cmd_kl->add_option("--tangent", tangents,
                       "isolated fixed point as name=tangent-dimension, repeatable");

    app.add_subcommand("selftest", "run the built-in sanity checks");

    std::string job_path;
    auto* cmd_run = app.add_subcommand("run", "run a complete JSON job document");
    cmd_run->add_option("--job", job_path, "document file, or - for stdin")->required();

    CLI11_PARSE(app, argc, argv);
    auto* cmd = app.get_subcommands().front();

    if (cmd == cmd_run) return run_document(slurp(job_path), seed, budget, as_json);

    ordered_json doc;
    doc["kind"] = cmd->get_name();

    if (cmd == cmd_eu || cmd == cmd_segre) {
        doc["vars"] = split_csv(vars);
        doc["poly"] = poly;
        ordered_json pt = ordered_json::array();
        for (const auto& c : split_csv(point)) pt.push_back(c);
        doc["point"] = pt;
        if (!factors.empty()) doc["factors"] = factors;
    } else if (cmd != app.get_subcommand("selftest")) {
        json space = parse_file(space_path, "space");
        if (!fixed.empty()) {
            if (!space.contains("strata") || !space["strata"].is_array()) {
                std::cerr << "error: --fixed needs a space file with a strata array\n";
                return kUsageError;
            }
            for (const auto& name : split_csv(fixed)) {
                bool found = false;
                for (auto& st : space["strata"])
                    if (st.is_object() && st.value("name", "") == name) {
                        st["fixed"] = true;
                        found = true;
                    }
                if (!found) {
                    std::cerr << "error: --fixed names unknown stratum '" << name << "'\n";
                    return kUsageError;
                }
            }
        }
        doc["space"] = space;

        if (cmd == cmd_chi || cmd == cmd_tr) {
            if (!values.empty()) doc["values"] = csv_ints(values, "--values");
            if (!coeffs.empty()) doc["coeffs"] = csv_ints(coeffs, "--coeffs");
        } else {
            doc["cone"] = parse_file(cone_path, "cone");
            if (cmd == cmd_kl && !tangents.empty()) {
                ordered_json ts = ordered_json::array();
                for (const auto& t : tangents) {
                    auto eq = t.find('=');
                    std::size_t used = 0;
                    int dim = 0;
                    bool ok = eq != std::string::npos;
                    if (ok) {
                        try {
                            dim = std::stoi(t.substr(eq + 1), &used);
                            ok = used == t.size() - eq - 1;
                        } catch (const std::exception&) {
                            ok = false;
                        }
                    }
                    if (!ok) {
                        std::cerr << "error: --tangent expects name=dimension, got '" << t
                                  << "'\n";
                        return kUsageError;
                    }
                    ordered_json td;
                    td["stratum"] = t.substr(0, eq);
                    td["dim"] = dim;
                    ts.push_back(std::move(td));
                }
                doc["tangents"] = ts;
            }
        }
    }

    return run_document(doc.dump(), seed, budget, as_json);
}
