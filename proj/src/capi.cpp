#include "euob.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "euob/euler.hpp"
#include "euob/jobs.hpp"

struct euob_engine {
    euob::JobDefaults defaults;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class Fn>
int guarded(euob_engine* e, Fn&& fn) {
    try {
        fn();
        e->last_error.clear();
        return EUOB_OK;
    } catch (const euob::Error& err) {
        e->last_error = err.what();
        return static_cast<int>(err.status());
    } catch (const std::exception& ex) {
        e->last_error = ex.what();
        return EUOB_ERR_INTERNAL;
    } catch (...) {
        e->last_error = "unidentified failure";
        return EUOB_ERR_INTERNAL;
    }
}

std::vector<std::string> split_list(const char* s) {
    std::vector<std::string> out;
    std::string cur;
    for (const char* p = s; *p; ++p) {
        if (*p == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (*p != ' ') {
            cur += *p;
        }
    }
    out.push_back(cur);
    return out;
}

int run_job_common(euob_engine* e, const char* document, char** out, bool as_text) {
    if (!e) return EUOB_ERR_SCHEMA;
    if (!document || !out) {
        e->last_error = "document and output pointer must not be null";
        return EUOB_ERR_SCHEMA;
    }
    *out = nullptr;
    return guarded(e, [&] {
        auto r = euob::run_job(document, e->defaults);
        *out = dup_string(as_text ? r.text : r.json);
        if (!*out) euob::throw_resource("out of memory for the report");
    });
}

}  // namespace

extern "C" {

euob_engine* euob_engine_new(void) { return new (std::nothrow) euob_engine; }

void euob_engine_free(euob_engine* e) { delete e; }

void euob_engine_set_seed(euob_engine* e, uint64_t seed) {
    if (e) e->defaults.seed = seed;
}

void euob_engine_set_budget(euob_engine* e, uint64_t limit) {
    if (e && limit > 0) e->defaults.budget = limit;
}

int euob_run_job_json(euob_engine* e, const char* document, char** out) {
    return run_job_common(e, document, out, false);
}

int euob_run_job_text(euob_engine* e, const char* document, char** out) {
    return run_job_common(e, document, out, true);
}

int euob_eu_at_point(euob_engine* e, const char* vars, const char* poly, const char* point,
                     long long* out_eu) {
    if (!e) return EUOB_ERR_SCHEMA;
    if (!vars || !poly || !point || !out_eu) {
        e->last_error = "all arguments must be non-null";
        return EUOB_ERR_SCHEMA;
    }
    return guarded(e, [&] {
        auto ctx = euob::VarContext::make({{"x", split_list(vars), false}});
        auto f = euob::parse_polynomial(ctx, poly);
        std::vector<mpq_class> P;
        for (const auto& c : split_list(point)) {
            try {
                mpq_class q(c);
                if (q.get_den() == 0) euob::throw_schema("zero denominator in '" + c + "'");
                q.canonicalize();
                P.push_back(q);
            } catch (const std::invalid_argument&) {
                euob::throw_schema("'" + c + "' is not a rational number");
            }
        }
        euob::Budget budget(e->defaults.budget);
        *out_eu = euob::eu_at_point(f, P, e->defaults.seed, budget);
    });
}

const char* euob_last_error(const euob_engine* e) { return e ? e->last_error.c_str() : ""; }

void euob_string_free(char* s) { std::free(s); }

const char* euob_version(void) { return "0.1.0"; }

}  // extern "C"
