#ifndef CATPART_CATPART_H
#define CATPART_CATPART_H

/* C interface to the catpart library. Every handle is opaque and owned by the
 * caller; every char* returned through an out-parameter is released with
 * catpart_string_free. Functions that can fail return a catpart_status and, on
 * failure, leave a message in the context (catpart_last_error). */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CATPART_API __declspec(dllexport)
#else
#define CATPART_API __attribute__((visibility("default")))
#endif

typedef enum catpart_status {
  CATPART_OK = 0,
  CATPART_ERR_INVALID_ARGUMENT = 1, /* unparseable or malformed input */
  CATPART_ERR_DOMAIN = 2,           /* input outside the map's domain */
  CATPART_ERR_CAP_EXCEEDED = 3,
  CATPART_ERR_INTERNAL = 4, /* a claimed identity failed at runtime */
  CATPART_ERR_ALLOC = 5
} catpart_status;

typedef enum catpart_format {
  CATPART_FORMAT_TEXT = 0,
  CATPART_FORMAT_JSON = 1,
  CATPART_FORMAT_YOUNG_ASCII = 2,
  CATPART_FORMAT_DOT = 3
} catpart_format;

typedef struct catpart_context catpart_context;
typedef struct catpart_partition catpart_partition;
typedef struct catpart_family catpart_family;
typedef struct catpart_pair catpart_pair; /* labeled tree pair */
typedef struct catpart_forest catpart_forest;
typedef struct catpart_report catpart_report;

/* Context: enumeration cap and the last error message. */
CATPART_API catpart_context* catpart_context_create(void);
CATPART_API void catpart_context_destroy(catpart_context* ctx);
CATPART_API void catpart_context_set_cap(catpart_context* ctx, uint64_t cap);
CATPART_API uint64_t catpart_context_cap(const catpart_context* ctx);
CATPART_API uint64_t catpart_default_cap(void);
/* Never NULL; empty when the last call succeeded. Owned by the context. */
CATPART_API const char* catpart_last_error(const catpart_context* ctx);
CATPART_API const char* catpart_status_name(catpart_status status);
CATPART_API void catpart_string_free(char* s);

/* "text", "json", "young-ascii", "dot". Returns 0 on an unknown name. */
CATPART_API int catpart_format_parse(const char* name, catpart_format* out);

/* Partitions. Text input is "7,6,5,3"; JSON input is {"parts":[...],"bound":k}.
 * parse: bound > 0 fixes the bound, 0 takes it from JSON or else the largest part.
 * parse_in_pnk: the bound is (number of parts) + slack, checked against JSON. */
CATPART_API catpart_status catpart_partition_parse(catpart_context* ctx, const char* text, int bound,
                                                   catpart_partition** out);
CATPART_API catpart_status catpart_partition_parse_in_pnk(catpart_context* ctx, const char* text, int slack,
                                                          catpart_partition** out);
CATPART_API void catpart_partition_destroy(catpart_partition* mu);
CATPART_API size_t catpart_partition_size(const catpart_partition* mu);
CATPART_API int catpart_partition_bound(const catpart_partition* mu);
/* 1-based; 0 when i is out of range. */
CATPART_API int catpart_partition_part(const catpart_partition* mu, size_t i);
CATPART_API int catpart_partition_equal(const catpart_partition* a, const catpart_partition* b);
CATPART_API int catpart_partition_is_square(const catpart_partition* mu);
CATPART_API catpart_status catpart_partition_tau(catpart_context* ctx, const catpart_partition* mu,
                                                 catpart_partition** out);
CATPART_API catpart_status catpart_partition_render(catpart_context* ctx, const catpart_partition* mu,
                                                    catpart_format format, char** out);

/* Closed forms. mu must have as many parts as its bound for the square maps. */
CATPART_API catpart_status catpart_square_witness(catpart_context* ctx, const catpart_partition* mu, int* b,
                                                  int* k, catpart_partition** core);
CATPART_API catpart_status catpart_member_square(catpart_context* ctx, const catpart_partition* mu,
                                                 const catpart_partition* core, int* member);
CATPART_API catpart_status catpart_theta(catpart_context* ctx, const catpart_partition* mu,
                                         catpart_partition** out);
/* values must hold catpart_partition_size(mu) ints; values[i-1] = mu~(i). */
CATPART_API catpart_status catpart_mu_tilde(catpart_context* ctx, const catpart_partition* mu, int m,
                                            int* values);
CATPART_API catpart_status catpart_member_omega(catpart_context* ctx, const catpart_partition* mu, int m,
                                                int* member);

/* Families, in canonical (lexicographically decreasing) order. */
CATPART_API catpart_status catpart_family_square(catpart_context* ctx, const catpart_partition* core, int ell,
                                                 catpart_family** out);
CATPART_API catpart_status catpart_family_omega(catpart_context* ctx, int m, int ell, catpart_family** out);
CATPART_API void catpart_family_destroy(catpart_family* family);
CATPART_API size_t catpart_family_size(const catpart_family* family);
CATPART_API catpart_status catpart_family_render(catpart_context* ctx, const catpart_family* family,
                                                 catpart_format format, char** out);

/* Labeled tree pairs. parse accepts "T-|T+", a single tree (cut into a pair),
 * JSON {"minus":..,"plus":..}, or the DOT this library writes. Shapes are
 * labeled over [edges + 1]. */
CATPART_API catpart_status catpart_pair_parse(catpart_context* ctx, const char* text, catpart_pair** out);
CATPART_API catpart_status catpart_pair_from_partition(catpart_context* ctx, const catpart_partition* mu,
                                                       catpart_pair** out);
CATPART_API catpart_status catpart_pair_to_partition(catpart_context* ctx, const catpart_pair* pair,
                                                     catpart_partition** out);
CATPART_API catpart_status catpart_pair_tau(catpart_context* ctx, const catpart_pair* pair, catpart_pair** out);
CATPART_API void catpart_pair_destroy(catpart_pair* pair);
CATPART_API int catpart_pair_equal(const catpart_pair* a, const catpart_pair* b);
CATPART_API catpart_status catpart_pair_render(catpart_context* ctx, const catpart_pair* pair,
                                               catpart_format format, char** out);

/* Forests. parse accepts "a;b;_" or JSON {"slots":[...]}; m is the slot count. */
CATPART_API catpart_status catpart_forest_parse(catpart_context* ctx, const char* text, catpart_forest** out);
CATPART_API catpart_status catpart_forest_from_partition(catpart_context* ctx, const catpart_partition* mu,
                                                         int m, catpart_forest** out);
CATPART_API catpart_status catpart_forest_to_partition(catpart_context* ctx, const catpart_forest* forest,
                                                       catpart_partition** out);
CATPART_API void catpart_forest_destroy(catpart_forest* forest);
CATPART_API int catpart_forest_slots(const catpart_forest* forest);
CATPART_API int catpart_forest_equal(const catpart_forest* a, const catpart_forest* b);
CATPART_API catpart_status catpart_forest_render(catpart_context* ctx, const catpart_forest* forest,
                                                 catpart_format format, char** out);
/* The L/M/H split and the labeled pair in each slot. */
CATPART_API catpart_status catpart_forest_render_decomposition(catpart_context* ctx,
                                                               const catpart_forest* forest,
                                                               catpart_format format, char** out);

/* Exact counts as decimal strings. */
CATPART_API catpart_status catpart_count_binomial(catpart_context* ctx, long n, long r, char** out);
CATPART_API catpart_status catpart_count_catalan(catpart_context* ctx, long n, char** out);
CATPART_API catpart_status catpart_count_ballot(catpart_context* ctx, long ell, long m, char** out);
CATPART_API catpart_status catpart_count_generalized_catalan(catpart_context* ctx, long k, long gamma, long n,
                                                             char** out);

/* Property suites. mutation may be NULL. */
CATPART_API catpart_status catpart_verify(catpart_context* ctx, int max_parts, int max_m, const char* mutation,
                                          catpart_report** out);
CATPART_API void catpart_report_destroy(catpart_report* report);
CATPART_API int catpart_report_passed(const catpart_report* report);
CATPART_API size_t catpart_report_suite_count(const catpart_report* report);
/* Owned by the report; NULL when i is out of range. */
CATPART_API const char* catpart_report_suite_name(const catpart_report* report, size_t i);
/* Text omits wall times so it is reproducible; JSON carries them. */
CATPART_API catpart_status catpart_report_render(catpart_context* ctx, const catpart_report* report,
                                                 catpart_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
