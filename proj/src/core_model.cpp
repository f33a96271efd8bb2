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

#include "weakprobe/core_model.hpp"

#include <cmath>
#include <string>

#include "weakprobe/error.hpp"

namespace weakprobe {

ProbeSpec::ProbeSpec(double nu, double nbar) : nu_(nu), nbar_(nbar) {
  if (!(nu > 0.0 && nu < 1.0)) {
    throw ValidationError("probe amplitude nu must lie in (0, 1), got " + std::to_string(nu));
  }
  if (!(nbar > 0.0) || !std::isfinite(nbar)) {
    throw ValidationError("mean photon number nbar must be positive, got " + std::to_string(nbar));
  }
}

bool ProbeSpec::integer_fock() const noexcept {
  const double index = fock_index();
  return std::abs(index - std::round(index)) < 1e-9;
}

double ProbeSpec::fringe_amplitude() const noexcept {
  return nu_ * std::sqrt((1.0 - nu_) * (1.0 + nu_));
}

Phase::Phase(double radians) : radians_(radians) {
  if (!std::isfinite(radians)) throw ValidationError("phase must be finite");
}

PriorWindow::PriorWindow(double width) : width_(width) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw ValidationError("prior width must be positive");
  }
}

std::int64_t checked_repetitions(std::int64_t m) {
  if (m < 1) throw ValidationError("repetition count m must be at least 1");
  return m;
}

double overlap_deficit(const ProbeSpec& probe, Phase phi) {
  const double nu2 = probe.nu() * probe.nu();
  const double half = std::sin(0.5 * probe.fock_index() * phi.radians());
  return 4.0 * nu2 * (1.0 - nu2) * half * half;
}

double overlap_squared(const ProbeSpec& probe, Phase phi) {
  return 1.0 - overlap_deficit(probe, phi);
}

double outcome_probability(const ProbeSpec& probe, Phase phi, Outcome outcome) {
  const double swing = probe.fringe_amplitude() * std::sin(probe.fock_index() * phi.radians());
  return outcome == Outcome::kPlus ? 0.5 + swing : 0.5 - swing;
}

double outcome_probability_product(const ProbeSpec& probe, Phase phi) {
  const double swing = probe.fringe_amplitude() * std::sin(probe.fock_index() * phi.radians());
  return 0.25 - swing * swing;
}

double outcome_probability_slope(const ProbeSpec& probe, Phase phi) {
  return probe.fringe_amplitude() * probe.fock_index() *
         std::cos(probe.fock_index() * phi.radians());
}

double quantum_fisher_information(const ProbeSpec& probe) {
  const double nu2 = probe.nu() * probe.nu();
  return 4.0 * probe.nbar() * probe.nbar() * (1.0 - nu2) / nu2;
}

double classical_fisher_information(const ProbeSpec& probe, Phase phi) {
  // (dP/dphi)^2 (1/P+ + 1/P-) = (dP/dphi)^2 / (P+ P-)
  const double slope = outcome_probability_slope(probe, phi);
  return slope * slope / outcome_probability_product(probe, phi);
}

ConditionDiagnostics condition_diagnostics(const ProbeSpec& probe, const PriorWindow& prior,
                                           std::int64_t m) {
  checked_repetitions(m);
  const double nu = probe.nu();
  const double reps = static_cast<double>(m);
  ConditionDiagnostics d{};
  d.c1 = prior.width() * probe.nbar() / (nu * nu);
  d.c2 = std::sqrt(reps) * probe.nbar() * prior.width() / nu;
  d.mnu2 = reps * nu * nu;
  d.c1_ok = d.c1 <= kCondition1Threshold;
  d.c2_ok = d.c2 >= kCondition2Threshold;
  return d;
}

}  // namespace weakprobe
