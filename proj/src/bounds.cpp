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

#include "weakprobe/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "weakprobe/error.hpp"
#include "weakprobe/quadrature.hpp"

namespace weakprobe {

namespace {

constexpr double kMaxRevivals = 1e5;

double overlap_period(const ProbeSpec& probe) {
  return 2.0 * std::numbers::pi / probe.fock_index();
}

}  // namespace

ReferenceScales reference_scales(const ProbeSpec& probe, std::int64_t m) {
  checked_repetitions(m);
  const double reps = static_cast<double>(m);
  return {1.0 / (std::sqrt(reps) * probe.nbar()), 1.0 / (reps * probe.nbar())};
}

double cramer_rao(const ProbeSpec& probe, std::int64_t m, Phase phi, FisherKind which) {
  checked_repetitions(m);
  const double fisher = which == FisherKind::kQuantum ? quantum_fisher_information(probe)
                                                      : classical_fisher_information(probe, phi);
  return std::sqrt(1.0 / (static_cast<double>(m) * fisher));
}

double ziv_zakai_integrand(const ProbeSpec& probe, const PriorWindow& prior, std::int64_t m,
                           double phi) {
  const double deficit = overlap_deficit(probe, Phase(phi));
  // V^m = exp(m ln(1 - deficit))
  const double z = std::exp(static_cast<double>(m) * std::log1p(-deficit));
  // 1 - sqrt(1 - z) without cancellation for small z
  const double gap = z / (1.0 + std::sqrt(1.0 - z));
  return 0.5 * phi * (1.0 - phi / prior.width()) * gap;
}

ZivZakaiResult ziv_zakai_exact(const ProbeSpec& probe, const PriorWindow& prior, std::int64_t m,
                               double tol) {
  checked_repetitions(m);
  if (!(tol > 0.0 && tol <= kMaxZivZakaiTolerance)) {
    throw ValidationError("Ziv-Zakai tolerance must lie in (0, 1e-2]");
  }
  const double width = prior.width();
  const double period = overlap_period(probe);
  const double revivals = std::floor(width / period);
  if (revivals > kMaxRevivals) {
    throw ValidationError("prior window spans too many overlap revivals for quadrature");
  }
  const double scale = probe.nu() / (std::sqrt(static_cast<double>(m)) * probe.nbar());

  std::vector<double> cuts{0.0, width};
  for (double j = 0.0; j <= revivals + 1.0; j += 1.0) {
    const double center = j * period;
    if (center <= width) cuts.push_back(center);
    for (double r = scale; r < 0.5 * period; r *= 4.0) {
      cuts.push_back(center - r);
      cuts.push_back(center + r);
    }
  }
  std::erase_if(cuts, [&](double c) { return c < 0.0 || c > width; });
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Magnitude of the bound, used only to floor per-piece absolute targets.
  const double magnitude = std::min(width * width / 12.0, scale * scale / 8.0);
  SimpsonOptions options;
  options.rel_tol = tol;
  options.initial_panels = 4;
  options.abs_tol = tol * magnitude / static_cast<double>(cuts.size());

  const auto integrand = [&](double phi) { return ziv_zakai_integrand(probe, prior, m, phi); };
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    try {
      const QuadratureResult piece = adaptive_simpson(integrand, cuts[i - 1], cuts[i], options);
      total += piece.value;
      error += piece.abs_error;
    } catch (const QuadratureError& e) {
      throw QuadratureError(e.what(), total + e.partial_value(), error + e.partial_error());
    }
  }
  return {std::sqrt(std::max(total, 0.0)), error};
}

double ziv_zakai_closed(const ProbeSpec& probe, std::int64_t m) {
  checked_repetitions(m);
  return std::sqrt(probe.nu() * probe.nu() /
                   (8.0 * static_cast<double>(m) * probe.nbar() * probe.nbar()));
}

double prior_averaged_fisher(const ProbeSpec& probe, const PriorWindow& prior) {
  const double width = prior.width();
  SimpsonOptions options;
  options.rel_tol = kBayesianQuadratureTolerance;
  const double panels = std::ceil(8.0 * width / overlap_period(probe));
  options.initial_panels = static_cast<int>(std::clamp(panels, 16.0, 1e5));
  const QuadratureResult r = adaptive_simpson(
      [&](double phi) { return classical_fisher_information(probe, Phase(phi)); }, 0.0, width,
      options);
  return r.value / width;
}

double bayesian_cramer_rao(const ProbeSpec& probe, const PriorWindow& prior, std::int64_t m) {
  checked_repetitions(m);
  const double prior_information = 1.0 / (prior.width() * prior.width());
  return std::sqrt(1.0 / (static_cast<double>(m) * prior_averaged_fisher(probe, prior) +
                          prior_information));
}

BoundsReport full_report(const ProbeSpec& probe, const PriorWindow& prior, std::int64_t m,
                         Phase phi, double tol) {
  BoundsReport report{};
  const ReferenceScales scales = reference_scales(probe, m);
  report.weak_scale = scales.weak;
  report.strong_scale = scales.strong;
  report.cr = cramer_rao(probe, m, phi, FisherKind::kClassical);
  report.qcr = cramer_rao(probe, m, phi, FisherKind::kQuantum);
  const ZivZakaiResult zz = ziv_zakai_exact(probe, prior, m, tol);
  report.zz_exact = zz.bound;
  report.quadrature_abs_error = zz.abs_error;
  report.zz_closed = ziv_zakai_closed(probe, m);
  report.bcr = bayesian_cramer_rao(probe, prior, m);
  report.diagnostics = condition_diagnostics(probe, prior, m);
  return report;
}

}  // namespace weakprobe
