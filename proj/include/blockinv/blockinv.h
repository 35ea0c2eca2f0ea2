#ifndef BLOCKINV_H
#define BLOCKINV_H

/* C interface to the block invariant library. Every call returns a status;
 * on failure blockinv_last_error() describes it (per thread). Strings handed
 * out through char** are owned by the caller and released with
 * blockinv_string_free. */

#include <stddef.h>

#if defined(BLOCKINV_BUILDING_LIBRARY)
#define BLOCKINV_API __attribute__((visibility("default")))
#else
#define BLOCKINV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BLOCKINV_OK = 0,
  BLOCKINV_INVALID_ARGUMENT = 1,
  BLOCKINV_DOMAIN = 2,
  BLOCKINV_CAP_EXCEEDED = 3,
  BLOCKINV_PARSE = 4,
  BLOCKINV_UNKNOWN_LEMMA = 5,
  BLOCKINV_IO = 6,
  BLOCKINV_INTERNAL = 7
} blockinv_status;

typedef enum { BLOCKINV_CASE_1MOD4 = 0, BLOCKINV_CASE_3MOD4 = 1 } blockinv_case;

typedef struct blockinv_params blockinv_params;
typedef struct blockinv_reports blockinv_reports;
typedef struct blockinv_ledger blockinv_ledger;

/* 0 means "use the built-in default" wherever a cap is taken. */
#define BLOCKINV_DEFAULT_CAP 200000u

BLOCKINV_API const char* blockinv_last_error(void);
/* Byte offset of the last parse error, or (size_t)-1. */
BLOCKINV_API size_t blockinv_last_error_offset(void);
BLOCKINV_API const char* blockinv_status_name(blockinv_status s);
BLOCKINV_API void blockinv_string_free(char* s);

/* --- block parameters ----------------------------------------------------- */

/* ell = 3: d in {1,2}, a >= 1, w >= 1. */
BLOCKINV_API blockinv_status blockinv_params_gl3(unsigned a, unsigned d, unsigned w, blockinv_params** out);
/* ell = 2: a >= 2 for 1 mod 4; for 3 mod 4 `a` is atilde >= 2. */
BLOCKINV_API blockinv_status blockinv_params_gl2(blockinv_case c, unsigned a, unsigned w, blockinv_params** out);
BLOCKINV_API void blockinv_params_free(blockinv_params* p);

/* Exact k(B), k0(B) and the l(B) lower bound as decimal strings. */
BLOCKINV_API blockinv_status blockinv_params_invariants(const blockinv_params* p, char** kB, char** k0B, char** lB);

/* --- conjecture checks ---------------------------------------------------- */

BLOCKINV_API blockinv_status blockinv_check(const blockinv_params* p, size_t cap, blockinv_reports** out);
BLOCKINV_API blockinv_status blockinv_check_sl(unsigned a, unsigned w, size_t cap, blockinv_reports** out);
/* grid: a file name or inline key=value text. cap 0 keeps the grid's cap. */
BLOCKINV_API blockinv_status blockinv_sweep(const char* grid, unsigned workers, size_t cap, blockinv_reports** out);

BLOCKINV_API size_t blockinv_reports_count(const blockinv_reports* r);
/* field: kB, k0B, lB, kD, kDprime (decimal), c1, c2 (verdict name), label. */
BLOCKINV_API blockinv_status blockinv_reports_field(const blockinv_reports* r, size_t index, const char* field,
                                                    char** out);
/* format: json, csv or markdown. */
BLOCKINV_API blockinv_status blockinv_reports_emit(const blockinv_reports* r, const char* format, char** out);
/* 0 all verified, 2 some inconclusive, 1 some violated. */
BLOCKINV_API int blockinv_reports_exit_code(const blockinv_reports* r);
BLOCKINV_API void blockinv_reports_free(blockinv_reports* r);

/* --- bounds ledger -------------------------------------------------------- */

/* JSON array of {id, statement, grid, exceptions}. */
BLOCKINV_API blockinv_status blockinv_lemma_list(char** out);
/* lemma: an id or "all". overrides: NULL, a file name or key=value text. */
BLOCKINV_API blockinv_status blockinv_bounds_check(const char* lemma, const char* overrides, size_t cap,
                                                   blockinv_ledger** out);
BLOCKINV_API size_t blockinv_ledger_count(const blockinv_ledger* l);
BLOCKINV_API blockinv_status blockinv_ledger_emit(const blockinv_ledger* l, const char* format, char** out);
/* 0 all hold or fail as documented, 2 something undecided, 1 an unexpected failure. */
BLOCKINV_API int blockinv_ledger_exit_code(const blockinv_ledger* l);
BLOCKINV_API void blockinv_ledger_free(blockinv_ledger* l);

/* --- group engine --------------------------------------------------------- */

/* op: order, classes, brute-classes, derived-classes. derived-classes is
 * exact when the group fits under cap and a lower bound otherwise;
 * *exact (may be NULL) tells which. */
BLOCKINV_API blockinv_status blockinv_group_query(const char* spec, const char* op, size_t cap, char** out, int* exact);

#ifdef __cplusplus
}
#endif

#endif
