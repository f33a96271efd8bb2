// Copyright 2026 The weakprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weakprobe/weakprobe.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "weakprobe/bounds.hpp"
#include "weakprobe/core_model.hpp"
#include "weakprobe/error.hpp"
#include "weakprobe/likelihood.hpp"
#include "weakprobe/montecarlo.hpp"

#ifndef WEAKPROBE_VERSION
#define WEAKPROBE_VERSION "0.0.0"
#endif

struct wp_probe {
  weakprobe::ProbeSpec spec;
};

struct wp_curve {
  weakprobe::PosteriorCurve curve;
};

struct wp_campaign {
  std::vector<wp_trial_record> records;
  wp_campaign_summary summary;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
wp_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    fn();
    return WP_OK;
  } catch (const weakprobe::Error& e) {
    last_error = e.what();
    return static_cast<wp_status>(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return WP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WP_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return WP_ERR_INTERNAL;
  }
}

void require(const void* ptr, const char* name) {
  if (ptr == nullptr) throw weakprobe::ValidationError(std::string(name) + " must not be null");
}

weakprobe::EstimatorMethod to_method(wp_estimator method) {
  switch (method) {
    case WP_ESTIMATOR_LINEARIZED: return weakprobe::EstimatorMethod::kLinearized;
    case WP_ESTIMATOR_EXACT_ARCSIN: return weakprobe::EstimatorMethod::kExactArcsin;
  }
  throw weakprobe::ValidationError("unknown estimator method");
}

wp_estimator from_method(weakprobe::EstimatorMethod method) {
  return method == weakprobe::EstimatorMethod::kLinearized ? WP_ESTIMATOR_LINEARIZED
                                                           : WP_ESTIMATOR_EXACT_ARCSIN;
}

wp_conditions to_c(const weakprobe::ConditionDiagnostics& d) {
  return {d.c1, d.c2, d.mnu2, d.c1_ok ? 1 : 0, d.c2_ok ? 1 : 0};
}

}  // namespace

extern "C" {

const char* wp_version(void) { return WEAKPROBE_VERSION; }

const char* wp_last_error(void) { return last_error.c_str(); }

wp_status wp_probe_new(double nu, double nbar, wp_probe** out) {
  return guarded([&] {
    require(out, "out");
    *out = new wp_probe{weakprobe::ProbeSpec(nu, nbar)};
  });
}

void wp_probe_free(wp_probe* probe) { delete probe; }

double wp_probe_nu(const wp_probe* probe) { return probe->spec.nu(); }
double wp_probe_nbar(const wp_probe* probe) { return probe->spec.nbar(); }
double wp_probe_fock_index(const wp_probe* probe) { return probe->spec.fock_index(); }
int wp_probe_integer_fock(const wp_probe* probe) { return probe->spec.integer_fock() ? 1 : 0; }

wp_status wp_overlap_squared(const wp_probe* probe, double phi, double* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    *out = weakprobe::overlap_squared(probe->spec, weakprobe::Phase(phi));
  });
}

wp_status wp_outcome_probability(const wp_probe* probe, double phi, int sign, double* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    *out = weakprobe::outcome_probability(
        probe->spec, weakprobe::Phase(phi),
        sign > 0 ? weakprobe::Outcome::kPlus : weakprobe::Outcome::kMinus);
  });
}

wp_status wp_quantum_fisher(const wp_probe* probe, double* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    *out = weakprobe::quantum_fisher_information(probe->spec);
  });
}

wp_status wp_classical_fisher(const wp_probe* probe, double phi, double* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    *out = weakprobe::classical_fisher_information(probe->spec, weakprobe::Phase(phi));
  });
}

wp_status wp_condition_diagnostics(const wp_probe* probe, double prior_width, int64_t m,
                                   wp_conditions* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    *out = to_c(weakprobe::condition_diagnostics(probe->spec, weakprobe::PriorWindow(prior_width),
                                                 m));
  });
}

wp_status wp_log_likelihood_exact(const wp_probe* probe, int64_t k, int64_t m, double phi,
                                  double* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    *out = weakprobe::log_likelihood_exact(weakprobe::OutcomeTally(k, m), probe->spec,
                                           weakprobe::Phase(phi));
  });
}

wp_status wp_likelihood_gaussian(const wp_probe* probe, int64_t k, int64_t m, double phi,
                                 double* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    *out = weakprobe::likelihood_gaussian(weakprobe::OutcomeTally(k, m), probe->spec,
                                          weakprobe::Phase(phi));
  });
}

wp_status wp_ml_estimate(const wp_probe* probe, int64_t k, int64_t m, wp_estimator method,
                         wp_estimate* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    const auto r =
        weakprobe::ml_estimate(weakprobe::OutcomeTally(k, m), probe->spec, to_method(method));
    *out = {r.phi_hat, from_method(r.method), r.clamped ? 1 : 0};
  });
}

void wp_grid_spec_default(wp_grid_spec* spec) {
  if (spec == nullptr) return;
  const weakprobe::GridSpec d;
  *spec = {d.points, d.half_width_sigmas, 0, 0.0, from_method(d.inversion)};
}

wp_status wp_posterior_curve_new(const wp_probe* probe, double phi_true, int64_t m,
                                 wp_posterior_mode mode, const wp_grid_spec* spec,
                                 wp_curve** out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    weakprobe::GridSpec grid;
    if (spec != nullptr) {
      grid.points = spec->points;
      grid.half_width_sigmas = spec->half_width_sigmas;
      if (spec->has_center) grid.center = spec->center;
      grid.inversion = to_method(spec->inversion);
    }
    const auto cpp_mode = mode == WP_POSTERIOR_GAUSSIAN_APPROX
                              ? weakprobe::PosteriorMode::kGaussianApprox
                              : weakprobe::PosteriorMode::kExactBinomial;
    *out = new wp_curve{
        weakprobe::posterior_curve(probe->spec, weakprobe::Phase(phi_true), m, cpp_mode, grid)};
  });
}

void wp_curve_free(wp_curve* curve) { delete curve; }
size_t wp_curve_size(const wp_curve* curve) { return curve->curve.grid.size(); }
const double* wp_curve_grid(const wp_curve* curve) { return curve->curve.grid.data(); }
const double* wp_curve_density(const wp_curve* curve) { return curve->curve.density.data(); }
double wp_curve_normalization(const wp_curve* curve) { return curve->curve.normalization; }

wp_status wp_curve_moments(const wp_curve* curve, double* mean, double* variance) {
  return guarded([&] {
    require(curve, "curve");
    require(mean, "mean");
    require(variance, "variance");
    const auto m = weakprobe::posterior_moments(curve->curve);
    *mean = m.mean;
    *variance = m.variance;
  });
}

wp_status wp_curve_max_relative_gap(const wp_curve* a, const wp_curve* b, double floor_fraction,
                                    double* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = weakprobe::max_relative_gap(a->curve, b->curve, floor_fraction);
  });
}

wp_status wp_reference_scales(const wp_probe* probe, int64_t m, double* weak, double* strong) {
  return guarded([&] {
    require(probe, "probe");
    require(weak, "weak");
    require(strong, "strong");
    const auto s = weakprobe::reference_scales(probe->spec, m);
    *weak = s.weak;
    *strong = s.strong;
  });
}

wp_status wp_cramer_rao(const wp_probe* probe, int64_t m, double phi, int quantum, double* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    *out = weakprobe::cramer_rao(
        probe->spec, m, weakprobe::Phase(phi),
        quantum ? weakprobe::FisherKind::kQuantum : weakprobe::FisherKind::kClassical);
  });
}

wp_status wp_ziv_zakai_exact(const wp_probe* probe, double prior_width, int64_t m, double tol,
                             double* bound, double* abs_error) {
  return guarded([&] {
    require(probe, "probe");
    require(bound, "bound");
    const auto r =
        weakprobe::ziv_zakai_exact(probe->spec, weakprobe::PriorWindow(prior_width), m, tol);
    *bound = r.bound;
    if (abs_error != nullptr) *abs_error = r.abs_error;
  });
}

wp_status wp_ziv_zakai_closed(const wp_probe* probe, int64_t m, double* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    *out = weakprobe::ziv_zakai_closed(probe->spec, m);
  });
}

wp_status wp_bayesian_cramer_rao(const wp_probe* probe, double prior_width, int64_t m,
                                 double* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    *out = weakprobe::bayesian_cramer_rao(probe->spec, weakprobe::PriorWindow(prior_width), m);
  });
}

wp_status wp_full_report(const wp_probe* probe, double prior_width, int64_t m, double phi,
                         double tol, wp_bounds_report* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    const auto r = weakprobe::full_report(probe->spec, weakprobe::PriorWindow(prior_width), m,
                                          weakprobe::Phase(phi), tol);
    *out = {r.weak_scale, r.strong_scale, r.cr, r.qcr, r.zz_exact, r.zz_closed, r.bcr,
            to_c(r.diagnostics), r.quadrature_abs_error};
  });
}

void wp_campaign_config_default(wp_campaign_config* config) {
  if (config == nullptr) return;
  *config = {0.1, 1.0, 1e-3, 1000000, 10000, WP_PHI_FIXED, 1e-4, WP_ESTIMATOR_LINEARIZED, 0, 0};
}

wp_status wp_campaign_run(const wp_campaign_config* config, wp_campaign** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    weakprobe::CampaignConfig cfg{weakprobe::ProbeSpec(config->nu, config->nbar),
                                  weakprobe::PriorWindow(config->prior_width), config->m,
                                  config->trials};
    cfg.phi_policy = config->phi_policy == WP_PHI_FROM_PRIOR
                         ? weakprobe::PhiPolicy::kSampleFromPrior
                         : weakprobe::PhiPolicy::kFixed;
    cfg.phi = config->phi;
    cfg.estimator = to_method(config->estimator);
    cfg.master_seed = config->master_seed;
    cfg.threads = config->threads;
    const auto result = weakprobe::run_campaign(cfg);

    auto campaign = std::make_unique<wp_campaign>();
    campaign->records.reserve(result.records.size());
    for (const auto& r : result.records) {
      campaign->records.push_back({r.index, r.phi_true, r.k, r.phi_hat, r.error, r.clamped});
    }
    const auto& s = result.summary;
    campaign->summary = {s.trials,
                         s.mse,
                         s.mse_stderr,
                         s.bias,
                         s.bias_stderr,
                         s.rmse,
                         s.rmse_stderr,
                         s.clamp_fraction,
                         s.clamp_warning ? 1 : 0,
                         s.reference.weak,
                         s.reference.strong,
                         s.reference.prior_width,
                         s.reference.cr,
                         s.reference.zz_closed,
                         s.ratio.weak,
                         s.ratio.strong,
                         s.ratio.prior_width,
                         s.ratio.cr,
                         s.ratio.zz_closed};
    *out = campaign.release();
  });
}

void wp_campaign_free(wp_campaign* campaign) { delete campaign; }

wp_status wp_campaign_summary_get(const wp_campaign* campaign, wp_campaign_summary* out) {
  return guarded([&] {
    require(campaign, "campaign");
    require(out, "out");
    *out = campaign->summary;
  });
}

int64_t wp_campaign_record_count(const wp_campaign* campaign) {
  return static_cast<int64_t>(campaign->records.size());
}

const wp_trial_record* wp_campaign_records(const wp_campaign* campaign) {
  return campaign->records.data();
}

wp_status wp_sample_tally(const wp_probe* probe, double phi, int64_t m, uint64_t master_seed,
                          uint64_t trial_index, int64_t* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    weakprobe::TrialStream stream(master_seed, trial_index);
    *out = weakprobe::sample_tally(probe->spec, weakprobe::Phase(phi),
                                   weakprobe::checked_repetitions(m), stream);
  });
}

wp_status wp_mse_oracle_exact(const wp_probe* probe, double phi, int64_t m, wp_estimator method,
                              double* out) {
  return guarded([&] {
    require(probe, "probe");
    require(out, "out");
    *out = weakprobe::mse_oracle_exact(probe->spec, weakprobe::Phase(phi), m, to_method(method));
  });
}

}  // extern "C"
