/*
 * Copyright 2026 The arpr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the arpr library: low-income proportion (at-risk-of-poverty
 * rate) estimation, Clopper-Pearson type intervals, exact coverage of those
 * intervals and a seeded Monte Carlo harness.
 *
 * Conventions
 *   - Every fallible call returns an arpr_status. On failure the output
 *     arguments are left untouched and arpr_last_error() describes the
 *     problem (thread-local; valid until the next failing call on the same
 *     thread).
 *   - Objects are opaque handles created by *_create / *_parse / *_read
 *     calls and released with the matching *_free. Free functions accept
 *     NULL.
 *   - Handles are immutable after creation and may be shared across threads.
 */

#ifndef ARPR_ARPR_H
#define ARPR_ARPR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ARPR_BUILDING_LIBRARY)
#    define ARPR_API __declspec(dllexport)
#  else
#    define ARPR_API __declspec(dllimport)
#  endif
#else
#  define ARPR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arpr_status {
  ARPR_OK = 0,
  ARPR_ERR_DOMAIN = 1,    /* argument outside the operation's domain */
  ARPR_ERR_DATA = 2,      /* malformed or unreadable input data */
  ARPR_ERR_NUMERICAL = 3, /* solver or quadrature failed its tolerance */
  ARPR_ERR_CONFIG = 4,    /* bad distribution spec or simulation settings */
  ARPR_ERR_NULL = 5,      /* required pointer argument was NULL */
  ARPR_ERR_INTERNAL = 6   /* unexpected failure (allocation, bug) */
} arpr_status;

typedef enum arpr_model {
  ARPR_MODEL_EXACT = 0,   /* order-statistic mixture, integrated exactly */
  ARPR_MODEL_BINOMIAL = 1 /* Binomial(M, theta / beta) */
} arpr_model;

typedef enum arpr_target {
  ARPR_TARGET_RATIO_P = 0,
  ARPR_TARGET_THETA = 1
} arpr_target;

typedef enum arpr_sampling {
  ARPR_SAMPLING_MATERIALIZED = 0,
  ARPR_SAMPLING_ORDER_STATISTIC = 1
} arpr_sampling;

typedef struct arpr_distribution arpr_distribution;
typedef struct arpr_sample arpr_sample;
typedef struct arpr_pmf arpr_pmf;

typedef struct arpr_estimate {
  int64_t n;
  int64_t eta;
  int64_t M;
  double theta_hat;
  double poverty_line;
  double quantile_hat;
} arpr_estimate;

typedef struct arpr_interval {
  double lower;
  double upper;
  double level;
  arpr_target target;
} arpr_interval;

typedef struct arpr_coverage_report {
  int64_t n;
  double alpha;
  double beta;
  double gamma;
  double theta;
  double coverage;
  double expected_length; /* E[upper - lower] */
  double covered_length;  /* E[(upper - lower) 1{theta covered}] */
  double mean_theta_hat;
  double bias;
  arpr_model model;
} arpr_coverage_report;

typedef struct arpr_simulation_config {
  int64_t n;
  double alpha;
  double beta;
  double gamma;
  int64_t replications;
  uint64_t seed;
  arpr_sampling sampling;
} arpr_simulation_config;

typedef struct arpr_simulation_result {
  double theta;
  double coverage;
  double coverage_se;
  double mean_length;
  double length_se;
  double mean_covered_length;
  double covered_length_se;
  double mean_theta_hat;
  double theta_hat_se;
  double bias;
  int64_t replications;
  uint64_t seed;
} arpr_simulation_result;

ARPR_API const char* arpr_version(void);
ARPR_API const char* arpr_last_error(void);
ARPR_API const char* arpr_status_name(arpr_status status);

/* ---- special functions ------------------------------------------------ */

ARPR_API arpr_status arpr_reg_inc_beta(double x, double a, double b, double* out);
ARPR_API arpr_status arpr_inv_reg_inc_beta(double delta, double a, double b, double* out);
ARPR_API arpr_status arpr_reg_inc_gamma_lower(double s, double x, double* out);
ARPR_API arpr_status arpr_inv_reg_inc_gamma(double delta, double s, double* out);
ARPR_API arpr_status arpr_std_normal_cdf(double z, double* out);
ARPR_API arpr_status arpr_std_normal_quantile(double delta, double* out);

/* ---- distributions ---------------------------------------------------- */

/* spec: "chisq:<df>", "lognormal:<mu>:<sigma>" or "power:<c>". */
ARPR_API arpr_status arpr_distribution_parse(const char* spec, arpr_distribution** out);
ARPR_API void arpr_distribution_free(arpr_distribution* d);
/* Writes the canonical spec, NUL-terminated. *needed receives the required
 * buffer size including the terminator; pass buf = NULL to query it. */
ARPR_API arpr_status arpr_distribution_spec(const arpr_distribution* d, char* buf, size_t len,
                                            size_t* needed);
ARPR_API arpr_status arpr_cdf(const arpr_distribution* d, double x, double* out);
ARPR_API arpr_status arpr_quantile(const arpr_distribution* d, double p, double* out);
ARPR_API arpr_status arpr_pdf(const arpr_distribution* d, double x, double* out);
ARPR_API arpr_status arpr_theta_true(const arpr_distribution* d, double alpha, double beta,
                                     double* out);

/* ---- samples and estimation ------------------------------------------- */

ARPR_API arpr_status arpr_sample_create(const double* values, size_t count, arpr_sample** out);
/* One income per line; '#' comments and blank lines ignored. On a data
 * error *bad_line (if non-NULL) receives the offending 1-based line. */
ARPR_API arpr_status arpr_sample_read_file(const char* path, arpr_sample** out, size_t* bad_line);
ARPR_API void arpr_sample_free(arpr_sample* s);
ARPR_API int64_t arpr_sample_size(const arpr_sample* s);

ARPR_API arpr_status arpr_indices(int64_t n, double beta, int64_t* m, int64_t* M);
ARPR_API arpr_status arpr_estimate_w(const arpr_sample* s, double alpha, double beta,
                                     arpr_estimate* out);
ARPR_API arpr_status arpr_estimate_lq(const arpr_sample* s, double alpha, double beta,
                                      arpr_estimate* out);
ARPR_API arpr_status arpr_cp_interval_p(int64_t eta, int64_t M, double gamma, arpr_interval* out);
ARPR_API arpr_status arpr_ci_theta(int64_t eta, int64_t M, double beta, double gamma,
                                   arpr_interval* out);

/* ---- exact law of eta and coverage ------------------------------------ */

ARPR_API arpr_status arpr_pmf_exact(const arpr_distribution* d, double alpha, int64_t n,
                                    double beta, int nodes, arpr_pmf** out);
ARPR_API arpr_status arpr_pmf_binomial(int64_t M, double p, arpr_pmf** out);
ARPR_API void arpr_pmf_free(arpr_pmf* pmf);
ARPR_API int64_t arpr_pmf_trials(const arpr_pmf* pmf);
/* Copies up to len masses (index = eta) into buf. */
ARPR_API arpr_status arpr_pmf_masses(const arpr_pmf* pmf, double* buf, size_t len);
ARPR_API arpr_status arpr_coverage_and_length(const arpr_pmf* pmf, double beta, double gamma,
                                              double theta, double* coverage,
                                              double* expected_length, double* covered_length);
ARPR_API arpr_status arpr_exact_bias(const arpr_pmf* pmf, int64_t n, double theta,
                                     double* mean_theta_hat, double* bias);
/* nodes <= 0 selects the default quadrature size. */
ARPR_API arpr_status arpr_table_row(const arpr_distribution* d, int64_t n, double alpha,
                                    double beta, double gamma, arpr_model model, int nodes,
                                    arpr_coverage_report* out);

/* ---- Monte Carlo ------------------------------------------------------ */

ARPR_API const char* arpr_generator_name(void);
ARPR_API arpr_status arpr_simulate(const arpr_distribution* d, const arpr_simulation_config* cfg,
                                   arpr_simulation_result* out);

#ifdef __cplusplus
}
#endif

#endif /* ARPR_ARPR_H */
