/* C interface to the partition-limit laboratory.
 *
 * All handles are opaque and owned by the caller once returned; release them
 * with the matching *_destroy function. Functions that return text write a
 * NUL-terminated string into a caller buffer. If `needed` is non-null it
 * receives the full length (excluding NUL); a buffer that is too small yields
 * PLAB_E_BUFFER and is left untouched, so callers can size and retry.
 *
 * The last error message is kept per thread (plab_last_error).
 */
#ifndef PLAB_H
#define PLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define PLAB_API __declspec(dllexport)
#else
#  define PLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plab_status {
  PLAB_OK = 0,
  PLAB_E_USAGE = 1,       /* invalid argument or configuration */
  PLAB_E_PRECISION = 2,   /* rounding or truncation not certifiable */
  PLAB_E_ACCEPTANCE = 3,  /* at least one acceptance criterion failed */
  PLAB_E_UNDEFINED = 4,   /* ratio with vanishing denominator */
  PLAB_E_BUFFER = 5,      /* output buffer too small */
  PLAB_E_BUDGET = 6,      /* requested work exceeds the budget */
  PLAB_E_INTERNAL = 7     /* consistency failure or unexpected exception */
} plab_status;

typedef enum plab_set_kind {
  PLAB_SET_PLUS = 0,
  PLAB_SET_MINUS = 1,
  PLAB_SET_PLUS_EXCL1 = 2,
  PLAB_SET_CLASSICAL = 3
} plab_set_kind;

typedef enum plab_format { PLAB_FORMAT_CSV = 0, PLAB_FORMAT_JSON = 1 } plab_format;

typedef struct plab_field plab_field;
typedef struct plab_table plab_table;
typedef struct plab_report plab_report;

PLAB_API const char* plab_version(void);
PLAB_API const char* plab_last_error(void);

/* ---- arith ------------------------------------------------------------ */

/* Returns 1 iff p is prime and p = 1 (mod 4). */
PLAB_API int plab_is_admissible_prime(uint64_t p, int* above_five);
/* Legendre symbol (n/p); p must be admissible. */
PLAB_API int plab_chi(uint64_t p, int64_t n);
/* Exact cusp order as "num/den" (or an integer). */
PLAB_API plab_status plab_cusp_order(uint64_t p, char* buf, size_t cap, size_t* needed);

/* ---- quadfield --------------------------------------------------------- */

PLAB_API plab_status plab_field_create(uint64_t p, unsigned digits, plab_field** out);
PLAB_API void plab_field_destroy(plab_field* field);
/* Keys: t, u, norm, epsilon, regulator, h, h_forms, l1, gauss_re, gauss_im,
 * cusp_order. Reals are decimal strings at the field's working precision. */
PLAB_API plab_status plab_field_get(const plab_field* field, const char* key, char* buf, size_t cap,
                                    size_t* needed);
PLAB_API long plab_field_class_number(const plab_field* field);

/* ---- partitions -------------------------------------------------------- */

/* p is ignored for PLAB_SET_CLASSICAL. */
PLAB_API plab_status plab_table_create(plab_set_kind set, uint64_t p, size_t n_max, plab_table** out);
/* Derived table p^(k)(n); the result is itself a table of order n_max. */
PLAB_API plab_status plab_table_diff(const plab_table* table, int k, plab_table** out);
PLAB_API void plab_table_destroy(plab_table* table);
PLAB_API size_t plab_table_order(const plab_table* table);
PLAB_API int plab_table_k(const plab_table* table);
PLAB_API plab_status plab_table_coeff(const plab_table* table, size_t n, char* buf, size_t cap,
                                      size_t* needed);
/* rho^(k)(n) from tables of orders k and k+1, as "num/den". */
PLAB_API plab_status plab_table_rho(const plab_table* dk, const plab_table* dk1, size_t n, char* buf,
                                    size_t cap, size_t* needed);
/* Writes "n,p(n)" CSV. */
PLAB_API plab_status plab_table_export_csv(const plab_table* table, const char* path);

typedef struct plab_scan_result {
  int64_t last_violation; /* -1 when there is none */
  uint64_t violation_count;
  uint64_t undefined_count;
} plab_scan_result;

PLAB_API plab_status plab_table_scan(const plab_table* table, plab_scan_result* out);

/* ---- qseries ----------------------------------------------------------- */

/* u_breve(i t) at the given decimal t. `bound` may be null. */
PLAB_API plab_status plab_u_breve(uint64_t p, const char* t, unsigned digits, char* value, size_t cap,
                                  char* bound, size_t bound_cap);
PLAB_API plab_status plab_rr_cf(const char* t, size_t depth, unsigned digits, char* value, size_t cap);

/* ---- lab --------------------------------------------------------------- */

typedef enum plab_command {
  PLAB_CMD_INVARIANTS = 0,
  PLAB_CMD_SERIES,
  PLAB_CMD_SCAN_CONJECTURE,
  PLAB_CMD_PETERSSON,
  PLAB_CMD_CESARO,
  PLAB_CMD_SCHUR,
  PLAB_CMD_MEINARDUS,
  PLAB_CMD_APPENDIX_EXCL1,
  PLAB_CMD_ACCEPTANCE
} plab_command;

typedef struct plab_config {
  plab_command command;
  uint64_t p;
  uint64_t p_max;
  size_t n_max;
  plab_set_kind set;
  int k;
  int k_min;
  int k_max;
  const char* const* t_values; /* null: default grid */
  size_t t_count;
  const uint64_t* n_values; /* null: default list */
  size_t n_count;
  int classical; /* scan-conjecture: also scan p(n) */
  unsigned digits;
  unsigned jobs;
  double budget;
  const char* checkpoint_dir; /* null or empty: no checkpoints */
} plab_config;

/* Fills defaults for every field. */
PLAB_API void plab_config_init(plab_config* config, plab_command command);
PLAB_API plab_status plab_command_from_name(const char* name, plab_command* out);

/* Runs an experiment. On PLAB_OK and PLAB_E_ACCEPTANCE a report is returned. */
PLAB_API plab_status plab_run(const plab_config* config, plab_report** out);
PLAB_API plab_status plab_report_render(const plab_report* report, plab_format format, char* buf,
                                        size_t cap, size_t* needed);
PLAB_API int plab_report_passed(const plab_report* report);
PLAB_API void plab_report_destroy(plab_report* report);

#ifdef __cplusplus
}
#endif

#endif /* PLAB_H */
