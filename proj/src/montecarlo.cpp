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

#include "weakprobe/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "weakprobe/binomial_sampler.hpp"
#include "weakprobe/bounds.hpp"
#include "weakprobe/error.hpp"

namespace weakprobe {

void validate(const CampaignConfig& config) {
  if (config.trials < 1) throw ValidationError("trials must be at least 1");
  checked_repetitions(config.m);
  if (config.phi_policy == PhiPolicy::kFixed) {
    if (!std::isfinite(config.phi) || !config.prior.contains(config.phi)) {
      throw ValidationError("fixed phase must lie in the prior window [0, W]");
    }
  }
  if (config.estimator == EstimatorMethod::kExactArcsin &&
      condition_diagnostics(config.probe, config.prior, config.m).c1 > 0.5 * std::numbers::pi) {
    throw ValidationError("exact-arcsin estimator needs W nbar / nu^2 <= pi/2");
  }
  if (config.threads < 0) throw ValidationError("threads must be nonnegative");
}

std::int64_t sample_tally(const ProbeSpec& probe, Phase phi, std::int64_t m,
                          TrialStream& stream) {
  return sample_binomial(m, outcome_probability(probe, phi, Outcome::kPlus), stream);
}

TrialRecord run_trial(const CampaignConfig& config, std::int64_t index) {
  TrialStream stream(config.master_seed, static_cast<std::uint64_t>(index));
  const double phi = config.phi_policy == PhiPolicy::kFixed
                         ? config.phi
                         : config.prior.width() * stream.next_uniform();
  const std::int64_t k = sample_tally(config.probe, Phase(phi), config.m, stream);
  const EstimateResult estimate =
      ml_estimate(OutcomeTally(k, config.m), config.probe, config.estimator);
  return {index, phi, k, estimate.phi_hat, estimate.phi_hat - phi, estimate.clamped};
}

CampaignResult run_campaign(const CampaignConfig& config) {
  validate(config);
  CampaignResult result;
  const auto n = static_cast<std::size_t>(config.trials);
  result.records.resize(n);

  unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  const auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      result.records[i] = run_trial(config, static_cast<std::int64_t>(i));
    }
  };
  if (workers <= 1) {
    fill(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
      pool.emplace_back(fill, begin, std::min(n, begin + chunk));
    }
  }
  result.summary = summarize(config, result.records);
  return result;
}

CampaignSummary summarize(const CampaignConfig& config, const std::vector<TrialRecord>& records) {
  CampaignSummary s{};
  const auto n = static_cast<double>(records.size());
  s.trials = static_cast<std::int64_t>(records.size());

  double sum_err = 0.0;
  double sum_sq = 0.0;
  std::int64_t clamps = 0;
  for (const TrialRecord& r : records) {
    sum_err += r.error;
    sum_sq += r.error * r.error;
    clamps += r.clamped ? 1 : 0;
  }
  s.bias = sum_err / n;
  s.mse = sum_sq / n;
  s.rmse = std::sqrt(s.mse);
  s.clamp_fraction = static_cast<double>(clamps) / n;
  s.clamp_warning = s.clamp_fraction > kClampWarningFraction;

  if (records.size() > 1) {
    double var_err = 0.0;
    double var_sq = 0.0;
    for (const TrialRecord& r : records) {
      const double de = r.error - s.bias;
      const double ds = r.error * r.error - s.mse;
      var_err += de * de;
      var_sq += ds * ds;
    }
    var_err /= n - 1.0;
    var_sq /= n - 1.0;
    s.bias_stderr = std::sqrt(var_err / n);
    s.mse_stderr = std::sqrt(var_sq / n);
    s.rmse_stderr = s.rmse > 0.0 ? s.mse_stderr / (2.0 * s.rmse) : 0.0;
  } else {
    s.bias_stderr = s.mse_stderr = s.rmse_stderr = std::numeric_limits<double>::quiet_NaN();
  }

  const ReferenceScales scales = reference_scales(config.probe, config.m);
  s.reference.weak = scales.weak;
  s.reference.strong = scales.strong;
  s.reference.prior_width = config.prior.width();
  s.reference.cr =
      config.phi_policy == PhiPolicy::kFixed
          ? cramer_rao(config.probe, config.m, Phase(config.phi), FisherKind::kClassical)
          : std::sqrt(1.0 / (static_cast<double>(config.m) *
                             prior_averaged_fisher(config.probe, config.prior)));
  s.reference.zz_closed = ziv_zakai_closed(config.probe, config.m);
  s.ratio = {s.rmse / s.reference.weak, s.rmse / s.reference.strong,
             s.rmse / s.reference.prior_width, s.rmse / s.reference.cr,
             s.rmse / s.reference.zz_closed};
  return s;
}

double mse_oracle_exact(const ProbeSpec& probe, Phase phi, std::int64_t m,
                        EstimatorMethod method) {
  checked_repetitions(m);
  if (m > kMaxOracleRepetitions) {
    throw ValidationError("exhaustive MSE oracle needs m <= 5000");
  }
  double total = 0.0;
  for (std::int64_t k = 0; k <= m; ++k) {
    const OutcomeTally tally(k, m);
    const double err = ml_estimate(tally, probe, method).phi_hat - phi.radians();
    total += std::exp(log_likelihood_exact(tally, probe, phi)) * err * err;
  }
  return total;
}

}  // namespace weakprobe
