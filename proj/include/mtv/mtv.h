#ifndef MTV_MTV_H
#define MTV_MTV_H

#include <stddef.h>

#if defined(MTV_BUILDING_LIBRARY)
#define MTV_API __attribute__((visibility("default")))
#else
#define MTV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Multiple t-values of level N, their interpolated variants, and the
 * verification harness. Every fallible call returns an mtv_status; the
 * message of the last failure is kept on the context. Strings produced by
 * the library come back as mtv_text handles owned by the caller. */

typedef struct mtv_context mtv_context;
typedef struct mtv_text mtv_text;

typedef enum mtv_status {
  MTV_OK = 0,
  MTV_ERR_INVALID_ARGUMENT = 1,
  MTV_ERR_PARSE = 2,
  MTV_ERR_UNREACHABLE = 3, /* requested tolerance not attainable */
  MTV_ERR_DIVERGENT = 4,
  MTV_ERR_UNKNOWN_CHECK = 5,
  MTV_ERR_IO = 6,
  MTV_ERR_INTERNAL = 7
} mtv_status;

typedef struct mtv_index_stats {
  int weight;
  int depth;
  int height;
  int admissible;
} mtv_index_stats;

MTV_API const char* mtv_version(void);
MTV_API const char* mtv_status_string(mtv_status status);

/* The new context uses $MTV_CACHE_DIR/values.cache when the variable is set. */
MTV_API mtv_status mtv_context_create(mtv_context** out);
MTV_API void mtv_context_destroy(mtv_context* ctx);
MTV_API const char* mtv_context_last_error(const mtv_context* ctx);
/* NULL or "" disables the value cache. */
MTV_API mtv_status mtv_context_set_cache_path(mtv_context* ctx, const char* path);
MTV_API mtv_status mtv_context_set_jobs(mtv_context* ctx, int jobs);

MTV_API const char* mtv_text_data(const mtv_text* text);
MTV_API size_t mtv_text_size(const mtv_text* text);
MTV_API void mtv_text_destroy(mtv_text* text);

/* Index strings: "3,1,1", "{2}^4", "2,{1}^3"; "" is the empty index. */
MTV_API mtv_status mtv_index_stats_of(mtv_context* ctx, const char* index, mtv_index_stats* out);
MTV_API mtv_status mtv_index_normalize(mtv_context* ctx, const char* index, mtv_text** out);
/* JSON [{"index": "...", "r_exponent": e}, ...] in pattern order. */
MTV_API mtv_status mtv_expand_index(mtv_context* ctx, const char* index, mtv_text** out);

/* JSON with every nonzero z-coefficient of Phi_0^r through z^max_order, in
 * the smallest (u, v, w) box covering weights up to max_weight. */
MTV_API mtv_status mtv_phi0_coefficients(mtv_context* ctx, int N, int a, int max_order, int max_weight,
                                         mtv_text** out);
/* JSON rows comparing those coefficients with brute-force sums. */
MTV_API mtv_status mtv_oracle_table(mtv_context* ctx, int N, int a, int max_order, int max_weight, mtv_text** out);

/* t^r_{N,a}(index) to `precision` digits; r is a rational string ("0", "1",
 * "1/2"; NULL means 0), tol a decimal string such as "1e-20". */
MTV_API mtv_status mtv_eval(mtv_context* ctx, int N, int a, const char* index, const char* r, int precision,
                            const char* tol, mtv_text** value, mtv_text** err);

/* JSON array of {id, kind, anchor, summary, defaults}. */
MTV_API mtv_status mtv_list_checks(mtv_context* ctx, mtv_text** out);
/* Runs the comma-separated check ids (NULL runs all). params_json may be NULL,
 * an object of parameters for every selected check, or an object keyed by
 * check id. Counts may be NULL. */
MTV_API mtv_status mtv_verify(mtv_context* ctx, const char* checks, const char* params_json, int with_timing,
                              mtv_text** report, int* passed, int* failed, int* skipped);

/* JSON {path, entries, skipped_lines, records: [...]}. */
MTV_API mtv_status mtv_cache_describe(mtv_context* ctx, mtv_text** out);
MTV_API mtv_status mtv_cache_clear(mtv_context* ctx);

#ifdef __cplusplus
}
#endif

#endif
