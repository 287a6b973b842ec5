#ifndef EUOB_H
#define EUOB_H

/* Obstruction calculus for hypersurface singularities: exact local Euler
 * obstructions, Segre-style multidegree tables, constructible-function
 * transforms and torus localization of weighted counts.
 *
 * Every entry point reports one of the status codes below; on failure
 * euob_last_error() on the same engine describes what went wrong.  Strings
 * handed out through char** are heap copies, release them with
 * euob_string_free().
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define EUOB_OK 0
#define EUOB_ERR_INTERNAL 1   /* a bug on our side, never expected */
#define EUOB_ERR_SCHEMA 2     /* malformed document, flag or name */
#define EUOB_ERR_RESOURCE 3   /* computation budget exhausted */
#define EUOB_ERR_SEED 4       /* degenerate random slice, reseed and rerun */
#define EUOB_ERR_VALIDATION 5 /* well-formed input, impossible mathematics */

#ifdef EUOB_BUILD
#define EUOB_API __attribute__((visibility("default")))
#else
#define EUOB_API
#endif

typedef struct euob_engine euob_engine;

EUOB_API euob_engine* euob_engine_new(void);
EUOB_API void euob_engine_free(euob_engine* e);

/* Defaults used by documents that do not pin their own seed or budget. */
EUOB_API void euob_engine_set_seed(euob_engine* e, uint64_t seed);
EUOB_API void euob_engine_set_budget(euob_engine* e, uint64_t limit);

/* Runs one JSON job document (kinds: eu, segre, strat-chi, transform,
 * behrend, kiemli, selftest).  On success *out receives the canonical JSON
 * report; the same document and seed always produce the same bytes.  The
 * _text variant renders the report for people instead. */
EUOB_API int euob_run_job_json(euob_engine* e, const char* document, char** out);
EUOB_API int euob_run_job_text(euob_engine* e, const char* document, char** out);

/* Local obstruction number of the hypersurface poly = 0 at one rational
 * point.  vars and point are comma-separated lists, e.g. "x,y,z" and
 * "0,1/2,-3". */
EUOB_API int euob_eu_at_point(euob_engine* e, const char* vars, const char* poly,
                              const char* point, long long* out_eu);

/* Message for the last failing call on this engine; empty after success. */
EUOB_API const char* euob_last_error(const euob_engine* e);

EUOB_API void euob_string_free(char* s);
EUOB_API const char* euob_version(void);

#ifdef __cplusplus
}
#endif

#endif /* EUOB_H */
