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

#include "weakprobe/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "weakprobe/binomial_pmf.hpp"
#include "weakprobe/error.hpp"

namespace weakprobe {

namespace {

double normal_tail(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

// Half-width of the principal arcsin branch in phase units.
double branch_limit(const ProbeSpec& probe) {
  return 0.5 * std::numbers::pi / probe.fock_index();
}

}  // namespace

OutcomeTally::OutcomeTally(std::int64_t k, std::int64_t m) : k_(k), m_(m) {
  checked_repetitions(m);
  if (k < 0 || k > m) {
    throw ValidationError("tally k must lie in [0, m], got k=" + std::to_string(k) +
                          " m=" + std::to_string(m));
  }
}

double log_likelihood_continuous(double k, std::int64_t m, const ProbeSpec& probe, Phase phi) {
  const double p = outcome_probability(probe, phi, Outcome::kPlus);
  const double q = outcome_probability(probe, phi, Outcome::kMinus);
  return log_binomial_pmf(k, static_cast<double>(m), p, q);
}

double log_likelihood_exact(const OutcomeTally& tally, const ProbeSpec& probe, Phase phi) {
  return log_likelihood_continuous(static_cast<double>(tally.k()), tally.m(), probe, phi);
}

double likelihood_gaussian(const OutcomeTally& tally, const ProbeSpec& probe, Phase phi) {
  const double m = static_cast<double>(tally.m());
  const double variance = m * outcome_probability_product(probe, phi);
  if (tally.m() < kGaussianMinRepetitions) {
    throw RegimeError("Gaussian likelihood needs m >= 100, got m=" + std::to_string(tally.m()));
  }
  if (variance < kGaussianMinVariance) {
    throw RegimeError("Gaussian likelihood needs m P+ P- >= 25, got " + std::to_string(variance));
  }
  const double mean = m * outcome_probability(probe, phi, Outcome::kPlus);
  const double d = static_cast<double>(tally.k()) - mean;
  return std::exp(-d * d / (2.0 * variance)) / std::sqrt(2.0 * std::numbers::pi * variance);
}

EstimateResult ml_estimate(const OutcomeTally& tally, const ProbeSpec& probe,
                           EstimatorMethod method) {
  const double m = static_cast<double>(tally.m());
  if (method == EstimatorMethod::kLinearized) {
    const double excess = static_cast<double>(tally.k()) - 0.5 * m;
    return {excess * probe.nu() / (m * probe.nbar()), method, false};
  }
  const double ratio = (tally.fraction() - 0.5) / probe.fringe_amplitude();
  if (std::abs(ratio) > 1.0) {
    return {std::copysign(branch_limit(probe), ratio), method, true};
  }
  return {std::asin(ratio) / probe.fock_index(), method, false};
}

double tally_for_estimate(const ProbeSpec& probe, std::int64_t m, double phi_hat,
                          EstimatorMethod method) {
  const double reps = static_cast<double>(m);
  if (method == EstimatorMethod::kLinearized) {
    return 0.5 * reps + reps * probe.nbar() * phi_hat / probe.nu();
  }
  return reps * outcome_probability(probe, Phase(phi_hat), Outcome::kPlus);
}

double posterior_sigma(const ProbeSpec& probe, std::int64_t m) {
  return probe.nu() / (2.0 * std::sqrt(static_cast<double>(m)) * probe.nbar());
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  }
  return sum;
}

PosteriorCurve posterior_curve(const ProbeSpec& probe, Phase phi_true, std::int64_t m,
                               PosteriorMode mode, const GridSpec& spec) {
  checked_repetitions(m);
  if (spec.points < 3) throw ValidationError("posterior grid needs at least 3 points");
  if (!(spec.half_width_sigmas >= kMinGridHalfWidthSigmas)) {
    throw ValidationError("posterior grid must span at least +-6 sigma");
  }
  const double phi = phi_true.radians();
  const double sigma = posterior_sigma(probe, m);
  const double center = spec.center.value_or(phi);
  const double lo = center - spec.half_width_sigmas * sigma;
  const double hi = center + spec.half_width_sigmas * sigma;
  if (mode == PosteriorMode::kExactBinomial && spec.inversion == EstimatorMethod::kExactArcsin &&
      (lo < -branch_limit(probe) || hi > branch_limit(probe))) {
    throw ValidationError("posterior grid leaves the principal arcsin branch");
  }

  PosteriorCurve curve;
  curve.mode = mode;
  const auto n = static_cast<std::size_t>(spec.points);
  curve.grid.resize(n);
  curve.density.resize(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) curve.grid[i] = lo + step * static_cast<double>(i);
  curve.grid.back() = hi;

  double outside = 0.0;
  if (mode == PosteriorMode::kGaussianApprox) {
    const double reps = static_cast<double>(m);
    const double rate = 2.0 * reps * probe.nbar() * probe.nbar() / (probe.nu() * probe.nu());
    const double peak = std::sqrt(rate / std::numbers::pi);
    for (std::size_t i = 0; i < n; ++i) {
      const double d = curve.grid[i] - phi;
      curve.density[i] = peak * std::exp(-rate * d * d);
    }
    outside = normal_tail((phi - lo) / sigma) + normal_tail((hi - phi) / sigma);
    curve.normalization = trapezoid(curve.grid, curve.density);
  } else {
    std::vector<double> logs(n);
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double k = tally_for_estimate(probe, m, curve.grid[i], spec.inversion);
      logs[i] = log_likelihood_continuous(k, m, probe, phi_true);
      top = std::max(top, logs[i]);
    }
    if (!std::isfinite(top)) throw CoverageError("posterior grid carries no probability mass");
    for (std::size_t i = 0; i < n; ++i) curve.density[i] = std::exp(logs[i] - top);
    const double reps = static_cast<double>(m);
    const double k_mean = reps * outcome_probability(probe, phi_true, Outcome::kPlus);
    const double k_sd = std::sqrt(reps * outcome_probability_product(probe, phi_true));
    const double k_lo = tally_for_estimate(probe, m, lo, spec.inversion);
    const double k_hi = tally_for_estimate(probe, m, hi, spec.inversion);
    outside = normal_tail((k_mean - k_lo) / k_sd) + normal_tail((k_hi - k_mean) / k_sd);
    curve.normalization = std::exp(top) * trapezoid(curve.grid, curve.density);
  }
  if (outside > kMaxOutsideMass) {
    throw CoverageError("posterior grid misses " + std::to_string(outside) +
                        " of the probability mass");
  }
  const double area = trapezoid(curve.grid, curve.density);
  if (!(area > 0.0) || !std::isfinite(area)) {
    throw CoverageError("posterior density has no finite positive mass on the grid");
  }
  for (double& d : curve.density) d /= area;
  return curve;
}

PosteriorMoments posterior_moments(const PosteriorCurve& curve) {
  const std::size_t n = curve.grid.size();
  std::vector<double> weighted(n);
  for (std::size_t i = 0; i < n; ++i) weighted[i] = curve.grid[i] * curve.density[i];
  const double mean = trapezoid(curve.grid, weighted);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = curve.grid[i] - mean;
    weighted[i] = d * d * curve.density[i];
  }
  return {mean, trapezoid(curve.grid, weighted)};
}

double max_relative_gap(const PosteriorCurve& a, const PosteriorCurve& b, double floor_fraction) {
  if (a.grid != b.grid) throw ValidationError("curves must share a grid");
  const double peak = *std::max_element(b.density.begin(), b.density.end());
  double gap = 0.0;
  for (std::size_t i = 0; i < b.grid.size(); ++i) {
    if (b.density[i] > floor_fraction * peak) {
      gap = std::max(gap, std::abs(a.density[i] - b.density[i]) / b.density[i]);
    }
  }
  return gap;
}

}  // namespace weakprobe
