#ifndef ELLIPTICA_ELLIPTICA_H
#define ELLIPTICA_ELLIPTICA_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define ELL_API __attribute__((visibility("default")))
#else
#define ELL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct {
  double re;
  double im;
} ell_complex;

typedef enum {
  ELL_OK = 0,
  ELL_ERR_DOMAIN = 1,
  ELL_ERR_POLE = 2,
  ELL_ERR_SCALE = 3,
  ELL_ERR_RANGE = 4,
  ELL_ERR_USAGE = 5,
  ELL_ERR_INTERNAL = 6
} ell_status;

typedef enum { ELL_DEGEN_NONE = 0, ELL_DEGEN_A_ZERO = 1, ELL_DEGEN_AB_ZERO = 2 } ell_degeneration;

/* Message of the last failed call on this thread; "" after a success. */
ELL_API const char* ell_last_error(void);
ELL_API const char* ell_status_name(ell_status status);

/* 17 significant digits, e.g. "5.0000000000000000e-1+0e0i"; ELL_ERR_USAGE if buf is too small. */
ELL_API ell_status ell_format_complex(ell_complex z, char* buf, size_t size);
ELL_API ell_status ell_format_real(double x, char* buf, size_t size);

/* ---- evaluation */

ELL_API ell_status ell_theta(ell_complex x, ell_complex p, ell_complex* out);
ELL_API ell_status ell_qpfac(ell_complex a, long n, ell_complex q, ell_complex p, ell_complex* out);

/* Nome p plus the weight parameters a, b, q. */
typedef struct ell_model ell_model;

ELL_API ell_status ell_model_new(ell_complex p, ell_complex a, ell_complex b, ell_complex q,
                                 ell_degeneration degeneration, ell_model** out);
ELL_API void ell_model_free(ell_model* model);

ELL_API ell_status ell_weight(const ell_model* model, long n, long m, ell_complex* out);
ELL_API ell_status ell_ebinom(const ell_model* model, long l, long k, long n, long m, ell_complex* out);

/* Terminating very-well-poised series with a_1 = a1 and a_6.. = rest[0..count). */
ELL_API ell_status ell_vseries(ell_complex a1, const ell_complex* rest, size_t count, ell_complex z,
                               ell_complex q, ell_complex p, long terms, ell_complex* out, double* max_term);

/* ---- lattice paths */

typedef struct ell_paths ell_paths;

ELL_API ell_status ell_paths_enumerate(long ux, long uy, long vx, long vy, ell_paths** out);
ELL_API void ell_paths_free(ell_paths* paths);
ELL_API size_t ell_paths_count(const ell_paths* paths);
/* "(x,y):ENNE"; owned by `paths`. */
ELL_API const char* ell_paths_text(const ell_paths* paths, size_t index);
ELL_API ell_status ell_paths_weight(const ell_paths* paths, size_t index, const ell_model* model, ell_complex* out);
ELL_API ell_status ell_gf_bruteforce(const ell_model* model, long ux, long uy, long vx, long vy, ell_complex* out);

/* ---- verification */

ELL_API size_t ell_suite_count(void);
ELL_API const char* ell_suite_id(size_t index);

typedef struct ell_config ell_config;

ELL_API ell_status ell_config_new(const char* suite_id, ell_config** out);
ELL_API void ell_config_free(ell_config* config);
/*
 * Keys: trials, seed, tol, m_max, r_max, grid_max, threads, escalate, mutate,
 * p_max, resample_limit, pole_guard, a_min, a_max, b_min, b_max, q_min, q_max,
 * q_turn. Values are decimal text; booleans take 0/1/true/false.
 */
ELL_API ell_status ell_config_set(ell_config* config, const char* key, const char* value);
/* Applies defaults and validates without running anything. */
ELL_API ell_status ell_config_check(const ell_config* config);

typedef struct ell_report ell_report;

typedef struct {
  const char* identity_id;
  uint64_t seed;
  long trial_index;
  const char* params;
  ell_complex lhs;
  ell_complex rhs;
  double rel_error;
  const char* status;
  int condition_flag;
} ell_outcome;

ELL_API ell_status ell_run_suite(const ell_config* config, ell_report** out);
ELL_API void ell_report_free(ell_report* report);
ELL_API const char* ell_report_suite(const ell_report* report);
/* Counted trials: pass and fail outcomes. */
ELL_API long ell_report_trials(const ell_report* report);
ELL_API long ell_report_passes(const ell_report* report);
ELL_API double ell_report_max_rel_error(const ell_report* report);
ELL_API int ell_report_passed(const ell_report* report);
ELL_API size_t ell_report_outcome_count(const ell_report* report);
/* String fields stay valid until the report is freed. */
ELL_API ell_status ell_report_outcome(const ell_report* report, size_t index, ell_outcome* out);

/* All outcomes of `reports` in order, as one JSON array or one CSV table. */
ELL_API ell_status ell_write_json(const ell_report* const* reports, size_t count, const char* path);
ELL_API ell_status ell_write_csv(const ell_report* const* reports, size_t count, const char* path);

#ifdef __cplusplus
}
#endif

#endif
