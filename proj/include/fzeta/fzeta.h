#ifndef FZETA_FZETA_H
#define FZETA_FZETA_H

/* C interface to libfzeta. Every call returns an fz_status; on failure the
 * message is available from fz_last_error() on the same thread. Objects are
 * opaque and released with their *_destroy function, strings with
 * fz_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(FZ_BUILDING_LIBRARY)
#define FZ_API __attribute__((visibility("default")))
#else
#define FZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  FZ_OK = 0,
  FZ_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown enum value */
  FZ_ERR_DOMAIN = 2,
  FZ_ERR_PRECONDITION = 3,
  FZ_ERR_NONCONVERGENCE = 4,
  FZ_ERR_INTERNAL = 5
} fz_status;

typedef enum { FZ_FORMAT_JSON = 0, FZ_FORMAT_CSV = 1, FZ_FORMAT_TEXT = 2 } fz_format;

typedef enum {
  FZ_METHOD_INTEGRAL = 0,
  FZ_METHOD_SERIES_DECOMPOSITION = 1, /* eval only */
  FZ_METHOD_ORACLE = 2
} fz_method;

typedef struct {
  double target_tol;
  int max_refinement_depth;
} fz_quad_spec;

FZ_API const char* fz_version(void);
FZ_API const char* fz_last_error(void);
FZ_API const char* fz_status_name(fz_status status);
FZ_API void fz_string_free(char* s);

FZ_API void fz_quad_spec_default(fz_quad_spec* q);

/* ---- point evaluation --------------------------------------------------- */

typedef struct {
  double a, b;
  double F_re, F_im;
  double zeta_re, zeta_im;
  double err_est;
} fz_eval_result;

/* F and zeta at s = a + ib. The series+decomposition method fills only F_im
 * (the imaginary part is what it computes) and needs 0 < a < 1, b >= 100;
 * zeta_* are then NaN. q may be NULL for the defaults. */
FZ_API fz_status fz_eval(double a, double b, fz_method method, const fz_quad_spec* q,
                         fz_eval_result* out);

FZ_API fz_status fz_F(double a, double b, const fz_quad_spec* q, double* re, double* im,
                      double* err_est);
FZ_API fz_status fz_gamma(double a, double b, const fz_quad_spec* q, double* re, double* im,
                          double* err_est);
FZ_API fz_status fz_eta(double a, double b, double tol, double* re, double* im, double* err_est);

/* ---- coefficient table -------------------------------------------------- */

typedef struct fz_coeff_table fz_coeff_table;

FZ_API fz_status fz_coeff_table_create(int n_max, fz_coeff_table** out);
FZ_API int fz_coeff_table_max_index(const fz_coeff_table* t);
/* Exact values as "p/q" (or "p"); free with fz_string_free. */
FZ_API fz_status fz_coeff_table_g_deriv(const fz_coeff_table* t, int n, char** out);
FZ_API fz_status fz_coeff_table_bernoulli(const fz_coeff_table* t, int n, char** out);
FZ_API fz_status fz_coeff_table_g_deriv_value(const fz_coeff_table* t, int n, double* out);
/* Whole table rendered as json, csv or text. */
FZ_API fz_status fz_coeff_table_render(const fz_coeff_table* t, fz_format format, char** out);
FZ_API void fz_coeff_table_destroy(fz_coeff_table* t);

/* ---- verification ------------------------------------------------------- */

typedef struct fz_report fz_report;

/* theorem = 0 runs every check. grid is NULL or "axis=v1,v2;axis=...". */
FZ_API fz_status fz_verify(int theorem, const char* grid, const fz_quad_spec* q, fz_report** out);
FZ_API int fz_report_passed(const fz_report* r);
FZ_API size_t fz_report_failures(const fz_report* r);
FZ_API fz_status fz_report_render(const fz_report* r, fz_format format, char** out);
FZ_API void fz_report_destroy(fz_report* r);

/* ---- decomposition ------------------------------------------------------ */

typedef struct fz_decomposition fz_decomposition;

typedef struct {
  double a, b;
  int K;
  double R, c, T;
  int64_t truncation_k;
  double upper_integral, err_est;
} fz_plan;

typedef struct {
  int64_t k;
  double t_lo, t_hi;
  double contribution, err_est, cumulative;
} fz_interval;

FZ_API fz_status fz_decompose(double a, double b, const fz_quad_spec* q, fz_decomposition** out);
FZ_API fz_status fz_decomposition_plan(const fz_decomposition* d, fz_plan* out);
FZ_API size_t fz_decomposition_count(const fz_decomposition* d);
FZ_API fz_status fz_decomposition_interval(const fz_decomposition* d, size_t i, fz_interval* out);
/* t_j = exp(j pi / b). */
FZ_API double fz_decomposition_endpoint(const fz_decomposition* d, int64_t j);
FZ_API void fz_decomposition_destroy(fz_decomposition* d);

/* ---- zeros on the critical line ----------------------------------------- */

typedef struct fz_zero_search fz_zero_search;

typedef struct {
  double b_star;
  double residual;
  double scaled_residual;
  fz_method method;
} fz_zero;

typedef struct {
  double b, re, im, abs;
} fz_sample;

/* method is FZ_METHOD_INTEGRAL or FZ_METHOD_ORACLE. */
FZ_API fz_status fz_find_zeros(double b_min, double b_max, double step, double zero_tol,
                               fz_method method, const fz_quad_spec* q, fz_zero_search** out);
FZ_API size_t fz_zero_search_count(const fz_zero_search* z);
FZ_API fz_status fz_zero_search_zero(const fz_zero_search* z, size_t i, fz_zero* out);
FZ_API size_t fz_zero_search_sample_count(const fz_zero_search* z);
FZ_API fz_status fz_zero_search_sample(const fz_zero_search* z, size_t i, fz_sample* out);
FZ_API void fz_zero_search_destroy(fz_zero_search* z);

#ifdef __cplusplus
}
#endif

#endif
