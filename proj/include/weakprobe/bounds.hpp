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

#include "weakprobe/core_model.hpp"

namespace weakprobe {

/// Weak and strong Heisenberg scales with unit constants:
/// 1/(sqrt(m) nbar) and 1/(m nbar).
struct ReferenceScales {
  double weak;
  double strong;
};

enum class FisherKind { kClassical, kQuantum };

/// Ziv-Zakai bound as a standard deviation, plus the quadrature's absolute
/// error estimate on the underlying variance integral (radians^2).
struct ZivZakaiResult {
  double bound;
  double abs_error;
};

/// Every bound as a standard deviation in radians.
struct BoundsReport {
  double weak_scale;
  double strong_scale;
  double cr;
  double qcr;
  double zz_exact;
  double zz_closed;
  double bcr;
  ConditionDiagnostics diagnostics;
  double quadrature_abs_error;
};

inline constexpr double kMaxZivZakaiTolerance = 1e-2;
inline constexpr double kBayesianQuadratureTolerance = 1e-8;

ReferenceScales reference_scales(const ProbeSpec& probe, std::int64_t m);

double cramer_rao(const ProbeSpec& probe, std::int64_t m, Phase phi, FisherKind which);

/// (1/2) phi (1 - phi/W) [1 - sqrt(1 - V(phi)^m)], V the squared overlap.
double ziv_zakai_integrand(const ProbeSpec& probe, const PriorWindow& prior, std::int64_t m,
                           double phi);

/// Numerical Ziv-Zakai bound. tol must lie in (0, 1e-2].
///
/// The prior window is cut at every revival of the overlap (multiples of
/// 2 pi nu^2 / nbar) and at geometric offsets of nu/(sqrt(m) nbar) around
/// each, so the narrow peaks are never straddled by a coarse panel.
ZivZakaiResult ziv_zakai_exact(const ProbeSpec& probe, const PriorWindow& prior, std::int64_t m,
                               double tol);

/// sqrt(nu^2 / (8 m nbar^2)).
double ziv_zakai_closed(const ProbeSpec& probe, std::int64_t m);

/// (1/W) integral_0^W F(phi) dphi.
double prior_averaged_fisher(const ProbeSpec& probe, const PriorWindow& prior);

/// sqrt(1 / (m Fbar + 1/W^2)). The prior information of the uniform window is
/// taken as 1/W^2.
double bayesian_cramer_rao(const ProbeSpec& probe, const PriorWindow& prior, std::int64_t m);

BoundsReport full_report(const ProbeSpec& probe, const PriorWindow& prior, std::int64_t m,
                         Phase phi, double tol = 1e-8);

}  // namespace weakprobe
