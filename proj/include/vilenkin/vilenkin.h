/* vilenkin — exact desk-scale computation on bounded Vilenkin groups.
 *
 * C API of the shared library. All objects are opaque handles created and
 * destroyed through these functions; every fallible call returns a
 * vil_status and leaves a diagnostic retrievable per thread through
 * vil_last_error(). Handles are immutable after creation and may be shared
 * across threads for reading.
 *
 * Conventions
 *   group spec string   m=<r0>,<r1>,...;L=<n>   (pattern repeats up to L)
 *   weight kind string  const | pow:<gamma> | logpow:<beta> | custom:<list>
 *   function selector   random:<seed> | lip:<alpha> | char:<k>
 *   JSON documents      {"spec": "...", "kind": "grid"|"spectrum",
 *                        "re": [...], "im": [...]}, values ordered by rank
 */

#ifndef VILENKIN_VILENKIN_H
#define VILENKIN_VILENKIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vil_status {
  VIL_OK = 0,
  VIL_ERR_INVALID_ARGUMENT = 1, /* bad input, precondition violation */
  VIL_ERR_LIMIT = 2,            /* grid size above the configured cap */
  VIL_ERR_IO = 3,               /* file read/write failure */
  VIL_ERR_INTERNAL = 4
} vil_status;

typedef struct vil_group vil_group;
typedef struct vil_grid vil_grid;
typedef struct vil_spectrum vil_spectrum;
typedef struct vil_weights vil_weights;
typedef struct vil_report vil_report;

/* Human-readable message for the most recent failure on this thread. */
const char* vil_last_error(void);

const char* vil_version(void);

/* Default cap on M_L (2^22); any max_grid argument of 0 means this cap. */
uint64_t vil_default_max_grid(void);

/* ---- group ------------------------------------------------------------ */

vil_status vil_group_parse(const char* text, uint64_t max_grid,
                           vil_group** out);
vil_status vil_group_create(const uint32_t* radices, size_t count,
                            size_t level, uint64_t max_grid, vil_group** out);
void vil_group_free(vil_group* g);

size_t vil_group_level(const vil_group* g);
uint64_t vil_group_size(const vil_group* g);   /* M_L */
uint32_t vil_group_bound(const vil_group* g);  /* R = max radix */
vil_status vil_group_radix(const vil_group* g, size_t k, uint32_t* out);
vil_status vil_group_gen_power(const vil_group* g, size_t k, uint64_t* out);
/* Canonical spec string; fails with VIL_ERR_INVALID_ARGUMENT if cap bytes
 * (including the terminator) do not suffice. */
vil_status vil_group_format(const vil_group* g, char* buf, size_t cap);

/* ---- grid functions and spectra ---------------------------------------- */

vil_status vil_grid_zero(const vil_group* g, vil_grid** out);
vil_status vil_grid_constant(const vil_group* g, double re, double im,
                             vil_grid** out);
/* psi_k materialized on the grid (0 <= k < M_L). */
vil_status vil_grid_character(const vil_group* g, uint64_t k, vil_grid** out);
/* Pseudo-random values from a splitmix64 stream (see README for the exact
 * state transition); mean removed when mean_zero is nonzero. */
vil_status vil_grid_random(const vil_group* g, uint64_t seed, int mean_zero,
                           vil_grid** out);
/* Lacunary Lipschitz-class function sum_k M_k^-alpha psi_{M_k}. */
vil_status vil_grid_lip(const vil_group* g, double alpha, vil_grid** out);
vil_status vil_grid_from_values(const vil_group* g, const double* re,
                                const double* im, uint64_t count,
                                vil_grid** out);
uint64_t vil_grid_size(const vil_grid* f);
/* Copies M_L values into caller arrays. */
vil_status vil_grid_values(const vil_grid* f, double* re, double* im);
void vil_grid_free(vil_grid* f);

uint64_t vil_spectrum_size(const vil_spectrum* s);
vil_status vil_spectrum_values(const vil_spectrum* s, double* re, double* im);
void vil_spectrum_free(vil_spectrum* s);

/* JSON serialization. Returned strings are heap-allocated; release them
 * with vil_string_free. */
vil_status vil_grid_to_json(const vil_grid* f, char** out);
vil_status vil_grid_from_json(const char* json, uint64_t max_grid,
                              vil_grid** out);
vil_status vil_spectrum_to_json(const vil_spectrum* s, char** out);
vil_status vil_spectrum_from_json(const char* json, uint64_t max_grid,
                                  vil_spectrum** out);
void vil_string_free(char* s);

/* ---- transforms --------------------------------------------------------- */

/* coeffs[k] = (1/M_L) sum_x f(x) conj(psi_k(x)) (fast mixed-radix path). */
vil_status vil_analyze(const vil_grid* f, vil_spectrum** out);
/* f(x) = sum_k coeffs[k] psi_k(x); inverse of vil_analyze. */
vil_status vil_synthesize(const vil_spectrum* s, vil_grid** out);
/* S_n f, 0 <= n <= M_L. */
vil_status vil_partial_sum(const vil_grid* f, uint64_t n, vil_grid** out);
/* (f*g)(x) = integral f(x-t) g(t) dmu(t). */
vil_status vil_convolve(const vil_grid* f, const vil_grid* g, vil_grid** out);
/* ((1/M_L) sum |f|^p)^(1/p), 1 <= p <= 64. */
vil_status vil_lp_norm(const vil_grid* f, double p, double* out);
vil_status vil_haar_integral(const vil_grid* f, double* re, double* im);
/* omega_p(1/M_s, f), 0 <= s <= L. */
vil_status vil_modulus(const vil_grid* f, double p, size_t s, double* out);

/* ---- weights ------------------------------------------------------------ */

vil_status vil_weights_make(const char* kind, uint64_t nmax,
                            vil_weights** out);
void vil_weights_free(vil_weights* w);
vil_status vil_weights_q(const vil_weights* w, uint64_t k, double* out);
vil_status vil_weights_partial(const vil_weights* w, uint64_t n, double* out);
/* 0 non-increasing, 1 non-decreasing, 2 other; a constant sequence reports
 * non-decreasing and satisfies both predicates below. */
int vil_weights_class(const vil_weights* w);
int vil_weights_is_non_increasing(const vil_weights* w);
int vil_weights_is_non_decreasing(const vil_weights* w);
int vil_weights_regular(const vil_weights* w);
/* Observed sup of n q_{n-1} / Q_n, 2 <= n <= nmax. */
vil_status vil_weights_cond2_sup(const vil_weights* w, double* out);

/* ---- kernels ------------------------------------------------------------ */

vil_status vil_dirichlet_kernel(const vil_group* g, uint64_t n, vil_grid** out);
vil_status vil_fejer_kernel(const vil_group* g, uint64_t n, vil_grid** out);
/* Three-branch closed form of K_{M_s}, 0 <= s <= L. */
vil_status vil_fejer_mn_closed(const vil_group* g, size_t s, vil_grid** out);
vil_status vil_t_kernel(const vil_group* g, const vil_weights* w, uint64_t n,
                        vil_grid** out);
/* Max-norm residual of D_{M_n-j} = D_{M_n} - psi_{M_n-1} conj(D_j). */
vil_status vil_dirichlet_complement_residual(const vil_group* g, size_t n,
                                             uint64_t j, double* out);

/* ---- summability means --------------------------------------------------- */

vil_status vil_fejer_mean(const vil_grid* f, uint64_t n, vil_grid** out);
vil_status vil_t_mean(const vil_grid* f, const vil_weights* w, uint64_t n,
                      vil_grid** out);
vil_status vil_norlund_mean(const vil_grid* f, const vil_weights* w,
                            uint64_t n, vil_grid** out);
/* T_n f through the Abel-transformed sum of Fejer means; n >= 2. */
vil_status vil_t_mean_abel(const vil_grid* f, const vil_weights* w, uint64_t n,
                           vil_grid** out);

/* ---- approximation bounds ------------------------------------------------ */

vil_status vil_thm1_rhs(const vil_grid* f, double p, const vil_weights* w,
                        uint64_t n, double* out);
vil_status vil_thm2_rhs(const vil_grid* f, double p, const vil_weights* w,
                        uint64_t n, double* rhs22, double* cond0_sum);
/* n_level indexes the subsequence order M_n, 1 <= n_level <= L. */
vil_status vil_thm3_rhs(const vil_grid* f, double p, const vil_weights* w,
                        size_t n_level, double* out);
vil_status vil_fejer_rhs(const vil_grid* f, double p, uint64_t n, double* out);
/* Least-squares slope of log(err) vs log(n); count >= 3, err > 0. */
vil_status vil_rate_fit(const uint64_t* n, const double* err, size_t count,
                        double* slope, double* r2);

/* ---- verification suites -------------------------------------------------- */

/* Kernel identity suite. Writes one CSV row per identity per order when
 * out_path is non-NULL (format "csv" or "json"); *all_pass reports whether
 * every row met its bound. */
vil_status vil_verify_kernels(const char* group, const char* weights_kind,
                              const char* out_path, const char* format,
                              uint64_t max_grid, int* all_pass);

/* Inequality ratio suite for theorem id "1", "2", "3" or "fejer". */
vil_status vil_verify_theorem(const char* id, const char* group,
                              const char* weights_kind, const double* pvals,
                              size_t np, const char* const* functions,
                              size_t nf, const char* out_path,
                              const char* format, uint64_t max_grid,
                              vil_report** out);

size_t vil_report_row_count(const vil_report* r);
int vil_report_all_pass(const vil_report* r);
vil_status vil_report_max_ratio(const vil_report* r, double* out);
/* Named diagnostics, e.g. cond0_sup / cond0_tophalf_factor / cond0_pass for
 * theorem 2. */
vil_status vil_report_extra(const vil_report* r, const char* key, double* out);
void vil_report_free(vil_report* r);

/* Convergence-rate experiment on a Walsh group of the given depth: fits the
 * log-log slope of ||T_{M_s} f - f||_p for f = lip(alpha). target may be
 * NaN to derive the expected exponent from alpha and the weight kind.
 * Writes an n,err CSV when out_path is non-NULL. */
vil_status vil_run_rates(double alpha, const char* weights_kind, size_t level,
                         double p, double tol, double target,
                         const char* out_path, uint64_t max_grid,
                         double* slope, double* r2, int* pass);

/* Reads a JSON grid/spectrum document and writes its transform: grids are
 * analyzed to spectra, spectra are synthesized to grids. */
vil_status vil_transform_file(const char* in_path, const char* out_path,
                              uint64_t max_grid);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* VILENKIN_VILENKIN_H */
