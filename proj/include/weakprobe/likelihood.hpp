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
#include <optional>
#include <span>
#include <vector>

#include "weakprobe/core_model.hpp"

namespace weakprobe {

/// k positive outcomes out of m repetitions.
class OutcomeTally {
 public:
  OutcomeTally(std::int64_t k, std::int64_t m);
  std::int64_t k() const noexcept { return k_; }
  std::int64_t m() const noexcept { return m_; }
  double fraction() const noexcept { return static_cast<double>(k_) / static_cast<double>(m_); }

 private:
  std::int64_t k_;
  std::int64_t m_;
};

enum class EstimatorMethod { kLinearized, kExactArcsin };

struct EstimateResult {
  double phi_hat;
  EstimatorMethod method;
  bool clamped;
};

/// ln P(k|phi) for the m-shot binomial.
double log_likelihood_exact(const OutcomeTally& tally, const ProbeSpec& probe, Phase phi);

/// ln P(k|phi) with real-valued k in [0, m].
double log_likelihood_continuous(double k, std::int64_t m, const ProbeSpec& probe, Phase phi);

inline constexpr std::int64_t kGaussianMinRepetitions = 100;
inline constexpr double kGaussianMinVariance = 25.0;

/// Normal approximation to P(k|phi). Throws RegimeError when m < 100 or
/// m P+ P- < 25.
double likelihood_gaussian(const OutcomeTally& tally, const ProbeSpec& probe, Phase phi);

/// Maximum-likelihood phase from a tally.
///
/// kExactArcsin inverts P(+|phi_hat) = k/m on the principal branch and clamps
/// to +-(nu^2/nbar)(pi/2) when k/m falls outside the fringe. kLinearized uses
/// the small-phase map phi_hat = (k - m/2) nu / (m nbar) and never clamps.
EstimateResult ml_estimate(const OutcomeTally& tally, const ProbeSpec& probe,
                           EstimatorMethod method);

/// Real-valued tally k(phi_hat), the inverse of the estimator map.
double tally_for_estimate(const ProbeSpec& probe, std::int64_t m, double phi_hat,
                          EstimatorMethod method);

enum class PosteriorMode { kExactBinomial, kGaussianApprox };

struct GridSpec {
  int points = 4001;
  double half_width_sigmas = 8.0;
  /// Defaults to the true phase.
  std::optional<double> center;
  /// Map k(phi_hat) used by the exact mode.
  EstimatorMethod inversion = EstimatorMethod::kLinearized;
};

inline constexpr double kMinGridHalfWidthSigmas = 6.0;
inline constexpr double kMaxOutsideMass = 1e-6;

struct PosteriorCurve {
  std::vector<double> grid;
  std::vector<double> density;
  PosteriorMode mode;
  /// Trapezoidal integral before rescaling to unit mass.
  double normalization;
};

struct PosteriorMoments {
  double mean;
  double variance;
};

/// nu / (2 sqrt(m) nbar), the estimator spread in the Gaussian regime.
double posterior_sigma(const ProbeSpec& probe, std::int64_t m);

/// Sampling distribution P(phi_hat|phi) of the estimator on a uniform grid.
///
/// Throws ValidationError if the grid is narrower than +-6 sigma or has fewer
/// than three points, and CoverageError if more than 1e-6 of the mass falls
/// outside it.
PosteriorCurve posterior_curve(const ProbeSpec& probe, Phase phi_true, std::int64_t m,
                               PosteriorMode mode, const GridSpec& spec = {});

PosteriorMoments posterior_moments(const PosteriorCurve& curve);

double trapezoid(std::span<const double> x, std::span<const double> y);

/// Largest |a - b| / b over grid points where b exceeds floor_fraction of its
/// peak. Both curves must share a grid.
double max_relative_gap(const PosteriorCurve& a, const PosteriorCurve& b, double floor_fraction);

}  // namespace weakprobe
