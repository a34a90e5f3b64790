#ifndef DUNKL_A2_H
#define DUNKL_A2_H

/* C interface to the A2 Dunkl kernel library. Every function returning
 * dka2_status leaves a message retrievable with dka2_last_error() (per
 * thread) on failure. Opaque handles are released with their _free
 * function; passing NULL to a _free function is a no-op. */

#include <stddef.h>

#if defined(DKA2_BUILDING_LIBRARY)
#define DKA2_API __attribute__((visibility("default")))
#else
#define DKA2_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  DKA2_OK = 0,
  DKA2_ERR_INVALID_ARGUMENT = 1,
  DKA2_ERR_DEGENERATE_SPECTRAL = 2,
  DKA2_ERR_NON_CONVERGENCE = 3,
  DKA2_ERR_DOMAIN = 4,
  DKA2_ERR_IO = 5,
  DKA2_ERR_INTERNAL = 6
} dka2_status;

/* Chambers in tie-breaking precedence order. */
typedef enum {
  DKA2_C123 = 0,
  DKA2_C213 = 1,
  DKA2_C132 = 2,
  DKA2_C231 = 3,
  DKA2_C312 = 4,
  DKA2_C321 = 5
} dka2_chamber;

typedef enum { DKA2_FORMULA_ALPHA = 0, DKA2_FORMULA_BETA = 1, DKA2_FORMULA_BOTH = 2, DKA2_FORMULA_AUTO = 3 } dka2_formula;
typedef enum { DKA2_RANK1_QUADRATURE = 0, DKA2_RANK1_BESSEL = 1 } dka2_rank1_method;
typedef enum { DKA2_HEAT_DERIVED = 0, DKA2_HEAT_PRINTED = 1 } dka2_heat_exponent;

/* Point of the trace-zero plane; |x1 + x2 + x3| <= 1e-9 is re-centered. */
typedef struct {
  double x1, x2, x3;
} dka2_point;

typedef struct {
  double log_value;
  double value; /* +inf when scaled != 0 */
  int scaled;
  int formula; /* dka2_formula actually used */
  int nodes;
  double delta;
  double cross_delta; /* DKA2_FORMULA_BOTH only */
} dka2_kernel_value;

typedef struct {
  dka2_point x;
  dka2_point lambda; /* Y for heat reports */
  double k;
  double t; /* 0 for kernel reports */
  double kernel_log;
  double estimate_log;
  double log_ratio;
  int chamber;
  int branch;
  double k_alpha, k_beta, k_gamma;
  int quad_nodes;
  double quad_delta;
  int ok; /* 0 when the point failed; see dka2_sweep_row_error */
} dka2_report;

typedef struct {
  double log_value;
  double value;
  double log_estimate;
  double estimate;
  double log_ratio;
  int chamber;
  int branch;
  double k_alpha, k_beta, k_gamma;
  int nodes;
} dka2_heat_value;

DKA2_API const char* dka2_last_error(void);
DKA2_API const char* dka2_version(void);
DKA2_API const char* dka2_status_name(dka2_status s);

DKA2_API dka2_status dka2_parse_point(const char* text, dka2_point* out);
DKA2_API const char* dka2_chamber_name(int chamber);
DKA2_API dka2_status dka2_parse_chamber(const char* name, int* out);
DKA2_API dka2_status dka2_chamber_of(dka2_point x, int* out);
/* Label such as "(k+1,k,k)" for a report's exponents; buffer of at least 16 bytes. */
DKA2_API dka2_status dka2_branch_label(const dka2_report* r, char* buf, size_t size);

/* rel_tol <= 0 selects 1e-9; nodes > 0 fixes the quadrature order instead of refining. */
DKA2_API dka2_status dka2_kernel(dka2_point x, dka2_point lambda, double k, double rel_tol, int formula, int nodes,
                                 dka2_kernel_value* out);
DKA2_API dka2_status dka2_rank1(double x, double v, double k, int method, double* out);
DKA2_API dka2_status dka2_eval_report(dka2_point x, dka2_point lambda, double k, double rel_tol, dka2_report* out);
DKA2_API dka2_status dka2_ck(double k, double* out);
DKA2_API dka2_status dka2_heat(double t, dka2_point x, dka2_point y, double k, double rel_tol, int variant,
                               dka2_heat_value* out);
/* h <= 0 selects the default step 1e-5 (1 + |X|). */
DKA2_API dka2_status dka2_eigen_residual(dka2_point x, dka2_point lambda, double k, dka2_point xi, double h,
                                         double* out);

typedef struct {
  int chamber;
  double radius;
  int grid_n;
  double k;
  double rel_tol;
  int threads; /* 0: hardware concurrency */
  double t;    /* > 0 runs the heat sweep at this time */
} dka2_sweep_spec;

typedef struct {
  size_t count;
  size_t failures;
  double min, max, mean, spread;
  size_t branch_counts[3];
  int failed; /* more than 1% of the points errored */
} dka2_sweep_summary;

typedef struct dka2_sweep dka2_sweep;

DKA2_API dka2_status dka2_sweep_run(const dka2_sweep_spec* spec, dka2_sweep** out);
DKA2_API size_t dka2_sweep_size(const dka2_sweep* s);
DKA2_API dka2_status dka2_sweep_row(const dka2_sweep* s, size_t i, dka2_report* out);
/* Error message of a failed row, or "" for a successful one. */
DKA2_API const char* dka2_sweep_row_error(const dka2_sweep* s, size_t i);
DKA2_API dka2_status dka2_sweep_summary_get(const dka2_sweep* s, dka2_sweep_summary* out);
/* Writes the sweep (or heat) CSV; path "-" writes to stdout. */
DKA2_API dka2_status dka2_sweep_write_csv(const dka2_sweep* s, const char* path);
DKA2_API void dka2_sweep_free(dka2_sweep* s);

typedef struct dka2_validation dka2_validation;

/* suite: one of the names from dka2_suite_name, or "all". */
DKA2_API size_t dka2_suite_count(void);
DKA2_API const char* dka2_suite_name(size_t i);
DKA2_API dka2_status dka2_validate(const char* suite, int threads, dka2_validation** out);
DKA2_API size_t dka2_validation_count(const dka2_validation* v);
DKA2_API const char* dka2_validation_name(const dka2_validation* v, size_t i);
DKA2_API int dka2_validation_passed(const dka2_validation* v, size_t i);
DKA2_API size_t dka2_validation_detail_count(const dka2_validation* v, size_t i);
DKA2_API const char* dka2_validation_detail(const dka2_validation* v, size_t i, size_t j);
DKA2_API void dka2_validation_free(dka2_validation* v);

typedef struct {
  const char* file;
  const char* label;
  double stored;
  double oracle;
  double production;
  double oracle_rel;
  double production_rel;
  int oracle_nodes;
  int pass;
} dka2_golden_entry;

typedef struct dka2_golden dka2_golden;

/* Default directory: $DUNKL_GOLDEN_DIR, else `fallback_dir`. */
DKA2_API const char* dka2_golden_dir(const char* fallback_dir);
/* regenerate != 0 rewrites the files; otherwise compares at rel_tol (<= 0 selects 1e-8). */
DKA2_API dka2_status dka2_golden_run(const char* dir, int regenerate, double rel_tol, dka2_golden** out);
DKA2_API size_t dka2_golden_count(const dka2_golden* g);
DKA2_API dka2_status dka2_golden_entry_get(const dka2_golden* g, size_t i, dka2_golden_entry* out);
DKA2_API int dka2_golden_passed(const dka2_golden* g);
DKA2_API void dka2_golden_free(dka2_golden* g);

#ifdef __cplusplus
}
#endif

#endif /* DUNKL_A2_H */
