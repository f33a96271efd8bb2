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

#include <cstddef>
#include <functional>

namespace weakprobe {

struct QuadratureResult {
  double value;
  double abs_error;
  std::size_t evaluations;
};

struct SimpsonOptions {
  double rel_tol = 1e-8;
  /// Floor on the absolute target, for pieces whose integral is near zero.
  double abs_tol = 0.0;
  int max_depth = 60;
  /// Uniform panels refined independently. Oscillatory integrands need
  /// several panels per period so that no feature hides between samples.
  int initial_panels = 16;
  std::size_t max_evaluations = 20'000'000;
};

/// Adaptive Simpson quadrature on [a, b].
///
/// The absolute target is max(rel_tol * coarse |integral| estimate, abs_tol), split
/// across panels and halved on each bisection. Each accepted leaf contributes
/// |S2 - S1| to abs_error and gets the Richardson correction. Throws
/// QuadratureError (with the partial sum) when a leaf hits max_depth without
/// converging or the evaluation budget runs out.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const SimpsonOptions& options = {});

}  // namespace weakprobe
