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

namespace weakprobe {

/// Unbalanced cat probe sqrt(1-nu^2)|0> + nu|nbar/nu^2>.
///
/// The Fock index nbar/nu^2 is kept real-valued. Formulas never need it to be
/// an integer; integer_fock() only reports whether the state is physical as
/// written.
class ProbeSpec {
 public:
  /// Throws ValidationError unless 0 < nu < 1 and nbar > 0.
  ProbeSpec(double nu, double nbar);

  double nu() const noexcept { return nu_; }
  double nbar() const noexcept { return nbar_; }
  double fock_index() const noexcept { return nbar_ / (nu_ * nu_); }
  bool integer_fock() const noexcept;

  /// nu*sqrt(1-nu^2), the amplitude of the sinusoid in P(+|phi).
  double fringe_amplitude() const noexcept;

 private:
  double nu_;
  double nbar_;
};

/// A phase shift in radians. Any finite value.
class Phase {
 public:
  explicit Phase(double radians);
  double radians() const noexcept { return radians_; }

 private:
  double radians_;
};

/// Uniform prior on [0, W].
class PriorWindow {
 public:
  explicit PriorWindow(double width);
  double width() const noexcept { return width_; }
  double density(double phi) const noexcept {
    return (phi >= 0.0 && phi <= width_) ? 1.0 / width_ : 0.0;
  }
  bool contains(double phi) const noexcept { return phi >= 0.0 && phi <= width_; }

 private:
  double width_;
};

/// Repetition count m. Throws ValidationError for m < 1.
std::int64_t checked_repetitions(std::int64_t m);

enum class Outcome { kPlus, kMinus };

struct ConditionDiagnostics {
  double c1;    // W nbar / nu^2
  double c2;    // sqrt(m) nbar W / nu
  double mnu2;  // m nu^2
  bool c1_ok;
  bool c2_ok;
};

inline constexpr double kCondition1Threshold = 0.3;
inline constexpr double kCondition2Threshold = 5.0;

/// 1 - |<psi|psi(phi)>|^2 via the half-angle form, accurate at small phase.
double overlap_deficit(const ProbeSpec& probe, Phase phi);

/// |<psi|psi(phi)>|^2 in [0, 1].
double overlap_squared(const ProbeSpec& probe, Phase phi);

double outcome_probability(const ProbeSpec& probe, Phase phi, Outcome outcome);

/// P(+|phi) P(-|phi), evaluated as 1/4 - (nu sqrt(1-nu^2) sin)^2.
double outcome_probability_product(const ProbeSpec& probe, Phase phi);

/// dP(+|phi)/dphi.
double outcome_probability_slope(const ProbeSpec& probe, Phase phi);

/// Four times the photon-number variance: 4 nbar^2 (1-nu^2) / nu^2.
double quantum_fisher_information(const ProbeSpec& probe);

/// Fisher information of one +/- measurement at phase phi.
double classical_fisher_information(const ProbeSpec& probe, Phase phi);

ConditionDiagnostics condition_diagnostics(const ProbeSpec& probe, const PriorWindow& prior,
                                           std::int64_t m);

}  // namespace weakprobe
