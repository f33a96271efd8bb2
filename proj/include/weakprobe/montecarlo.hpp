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

#pragma once

#include <cstdint>
#include <vector>

#include "weakprobe/core_model.hpp"
#include "weakprobe/likelihood.hpp"
#include "weakprobe/philox.hpp"

namespace weakprobe {

enum class PhiPolicy { kFixed, kSampleFromPrior };

struct CampaignConfig {
  ProbeSpec probe;
  PriorWindow prior;
  std::int64_t m;
  std::int64_t trials;
  PhiPolicy phi_policy = PhiPolicy::kFixed;
  /// Used by kFixed; must lie in [0, W].
  double phi = 0.0;
  EstimatorMethod estimator = EstimatorMethod::kLinearized;
  std::uint64_t master_seed = 0;
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend
  /// on it.
  int threads = 0;
};

struct TrialRecord {
  std::int64_t index;
  double phi_true;
  std::int64_t k;
  double phi_hat;
  double error;
  bool clamped;
};

struct CampaignComparisons {
  double weak;
  double strong;
  double prior_width;
  double cr;
  double zz_closed;
};

struct CampaignSummary {
  std::int64_t trials;
  double mse;
  double mse_stderr;
  double bias;
  double bias_stderr;
  double rmse;
  double rmse_stderr;
  double clamp_fraction;
  bool clamp_warning;
  /// Reference values the rmse is compared against.
  CampaignComparisons reference;
  /// rmse divided by each reference value.
  CampaignComparisons ratio;
};

struct CampaignResult {
  std::vector<TrialRecord> records;
  CampaignSummary summary;
};

inline constexpr double kClampWarningFraction = 0.01;
inline constexpr std::int64_t kMaxOracleRepetitions = 5000;

/// Throws ValidationError on trials < 1, m < 1, fixed phi outside [0, W], or
/// an exact-arcsin estimator with W nbar / nu^2 > pi/2.
void validate(const CampaignConfig& config);

/// Number of + outcomes in m shots at phase phi.
std::int64_t sample_tally(const ProbeSpec& probe, Phase phi, std::int64_t m,
                          TrialStream& stream);

/// Regenerates a single trial from (master_seed, index).
TrialRecord run_trial(const CampaignConfig& config, std::int64_t index);

CampaignResult run_campaign(const CampaignConfig& config);

/// Ordered fold over records; records must be sorted by index.
CampaignSummary summarize(const CampaignConfig& config, const std::vector<TrialRecord>& records);

/// Sum over k of P(k|phi) (phi_hat(k) - phi)^2 for m <= 5000.
double mse_oracle_exact(const ProbeSpec& probe, Phase phi, std::int64_t m,
                        EstimatorMethod method);

}  // namespace weakprobe
