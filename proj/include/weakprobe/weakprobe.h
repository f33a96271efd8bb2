/*
 * Copyright 2026 The weakprobe Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WEAKPROBE_WEAKPROBE_H
#define WEAKPROBE_WEAKPROBE_H

/*
 * C interface to libweakprobe.
 *
 * Every fallible call returns a wp_status; on failure the message is
 * available from wp_last_error() on the same thread until the next call.
 * Handles are opaque and owned by the caller, who releases them with the
 * matching *_free function. Passing NULL to *_free is allowed.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WEAKPROBE_BUILDING_LIBRARY)
#    define WP_API __declspec(dllexport)
#  else
#    define WP_API __declspec(dllimport)
#  endif
#else
#  define WP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status values double as process exit codes for the CLI. */
typedef enum wp_status {
  WP_OK = 0,
  WP_ERR_VALIDATION = 2,
  WP_ERR_NUMERICAL = 3,
  WP_ERR_IO = 4,
  WP_ERR_INTERNAL = 5
} wp_status;

typedef enum wp_estimator {
  WP_ESTIMATOR_LINEARIZED = 0,
  WP_ESTIMATOR_EXACT_ARCSIN = 1
} wp_estimator;

typedef enum wp_posterior_mode {
  WP_POSTERIOR_EXACT_BINOMIAL = 0,
  WP_POSTERIOR_GAUSSIAN_APPROX = 1
} wp_posterior_mode;

typedef enum wp_phi_policy {
  WP_PHI_FIXED = 0,
  WP_PHI_FROM_PRIOR = 1
} wp_phi_policy;

typedef struct wp_probe wp_probe;
typedef struct wp_curve wp_curve;
typedef struct wp_campaign wp_campaign;

typedef struct wp_conditions {
  double c1;   /* W nbar / nu^2 */
  double c2;   /* sqrt(m) nbar W / nu */
  double mnu2; /* m nu^2 */
  int c1_ok;
  int c2_ok;
} wp_conditions;

typedef struct wp_estimate {
  double phi_hat;
  wp_estimator method;
  int clamped;
} wp_estimate;

typedef struct wp_grid_spec {
  int32_t points;
  double half_width_sigmas;
  int has_center; /* otherwise centred on the true phase */
  double center;
  wp_estimator inversion;
} wp_grid_spec;

/* All bounds are standard deviations in radians. */
typedef struct wp_bounds_report {
  double weak_scale;
  double strong_scale;
  double cr;
  double qcr;
  double zz_exact;
  double zz_closed;
  double bcr;
  wp_conditions diagnostics;
  double quadrature_abs_error; /* radians^2 */
} wp_bounds_report;

typedef struct wp_campaign_config {
  double nu;
  double nbar;
  double prior_width;
  int64_t m;
  int64_t trials;
  wp_phi_policy phi_policy;
  double phi;
  wp_estimator estimator;
  uint64_t master_seed;
  int32_t threads; /* 0 = hardware concurrency */
} wp_campaign_config;

typedef struct wp_trial_record {
  int64_t index;
  double phi_true;
  int64_t k;
  double phi_hat;
  double error;
  int clamped;
} wp_trial_record;

typedef struct wp_campaign_summary {
  int64_t trials;
  double mse;
  double mse_stderr;
  double bias;
  double bias_stderr;
  double rmse;
  double rmse_stderr;
  double clamp_fraction;
  int clamp_warning;
  double ref_weak;
  double ref_strong;
  double ref_prior_width;
  double ref_cr;
  double ref_zz_closed;
  double rmse_over_weak;
  double rmse_over_strong;
  double rmse_over_prior_width;
  double rmse_over_cr;
  double rmse_over_zz_closed;
} wp_campaign_summary;

WP_API const char* wp_version(void);
WP_API const char* wp_last_error(void);

/* Probe */
WP_API wp_status wp_probe_new(double nu, double nbar, wp_probe** out);
WP_API void wp_probe_free(wp_probe* probe);
WP_API double wp_probe_nu(const wp_probe* probe);
WP_API double wp_probe_nbar(const wp_probe* probe);
WP_API double wp_probe_fock_index(const wp_probe* probe);
WP_API int wp_probe_integer_fock(const wp_probe* probe);

/* Core model */
WP_API wp_status wp_overlap_squared(const wp_probe* probe, double phi, double* out);
/* sign > 0 selects the + outcome, otherwise - */
WP_API wp_status wp_outcome_probability(const wp_probe* probe, double phi, int sign, double* out);
WP_API wp_status wp_quantum_fisher(const wp_probe* probe, double* out);
WP_API wp_status wp_classical_fisher(const wp_probe* probe, double phi, double* out);
WP_API wp_status wp_condition_diagnostics(const wp_probe* probe, double prior_width, int64_t m,
                                          wp_conditions* out);

/* Likelihood and estimation */
WP_API wp_status wp_log_likelihood_exact(const wp_probe* probe, int64_t k, int64_t m, double phi,
                                         double* out);
WP_API wp_status wp_likelihood_gaussian(const wp_probe* probe, int64_t k, int64_t m, double phi,
                                        double* out);
WP_API wp_status wp_ml_estimate(const wp_probe* probe, int64_t k, int64_t m, wp_estimator method,
                                wp_estimate* out);

WP_API void wp_grid_spec_default(wp_grid_spec* spec);
WP_API wp_status wp_posterior_curve_new(const wp_probe* probe, double phi_true, int64_t m,
                                        wp_posterior_mode mode, const wp_grid_spec* spec,
                                        wp_curve** out);
WP_API void wp_curve_free(wp_curve* curve);
WP_API size_t wp_curve_size(const wp_curve* curve);
WP_API const double* wp_curve_grid(const wp_curve* curve);
WP_API const double* wp_curve_density(const wp_curve* curve);
WP_API double wp_curve_normalization(const wp_curve* curve);
WP_API wp_status wp_curve_moments(const wp_curve* curve, double* mean, double* variance);
/* max |a-b|/b where b exceeds floor_fraction of its peak; shared grid required */
WP_API wp_status wp_curve_max_relative_gap(const wp_curve* a, const wp_curve* b,
                                           double floor_fraction, double* out);

/* Bounds */
WP_API wp_status wp_reference_scales(const wp_probe* probe, int64_t m, double* weak,
                                     double* strong);
WP_API wp_status wp_cramer_rao(const wp_probe* probe, int64_t m, double phi, int quantum,
                               double* out);
WP_API wp_status wp_ziv_zakai_exact(const wp_probe* probe, double prior_width, int64_t m,
                                    double tol, double* bound, double* abs_error);
WP_API wp_status wp_ziv_zakai_closed(const wp_probe* probe, int64_t m, double* out);
WP_API wp_status wp_bayesian_cramer_rao(const wp_probe* probe, double prior_width, int64_t m,
                                        double* out);
WP_API wp_status wp_full_report(const wp_probe* probe, double prior_width, int64_t m, double phi,
                                double tol, wp_bounds_report* out);

/* Monte Carlo */
WP_API void wp_campaign_config_default(wp_campaign_config* config);
WP_API wp_status wp_campaign_run(const wp_campaign_config* config, wp_campaign** out);
WP_API void wp_campaign_free(wp_campaign* campaign);
WP_API wp_status wp_campaign_summary_get(const wp_campaign* campaign, wp_campaign_summary* out);
WP_API int64_t wp_campaign_record_count(const wp_campaign* campaign);
/* Contiguous array of wp_campaign_record_count() records, valid until free. */
WP_API const wp_trial_record* wp_campaign_records(const wp_campaign* campaign);
WP_API wp_status wp_sample_tally(const wp_probe* probe, double phi, int64_t m,
                                 uint64_t master_seed, uint64_t trial_index, int64_t* out);
WP_API wp_status wp_mse_oracle_exact(const wp_probe* probe, double phi, int64_t m,
                                     wp_estimator method, double* out);

#ifdef __cplusplus
}
#endif

#endif /* WEAKPROBE_WEAKPROBE_H */
