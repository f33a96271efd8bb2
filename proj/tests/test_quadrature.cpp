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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "weakprobe/error.hpp"
#include "weakprobe/quadrature.hpp"

namespace weakprobe {
namespace {

TEST(AdaptiveSimpson, CubicIsExact) {
  const auto r = adaptive_simpson([](double x) { return 4.0 * x * x * x - 3.0 * x + 1.0; }, -1.0, 2.0);
  EXPECT_NEAR(r.value, 13.5, 1e-13);
  EXPECT_LE(r.abs_error, 1e-12);
}

TEST(AdaptiveSimpson, Sine) {
  const auto r = adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  EXPECT_NEAR(r.value, 2.0, 1e-10);
  EXPECT_GT(r.evaluations, 0u);
}

TEST(AdaptiveSimpson, ReversedLimitsFlipSign) {
  const auto f = [](double x) { return std::exp(x); };
  const auto fwd = adaptive_simpson(f, 0.0, 1.0);
  const auto rev = adaptive_simpson(f, 1.0, 0.0);
  EXPECT_NEAR(fwd.value, std::numbers::e - 1.0, 1e-10);
  EXPECT_NEAR(rev.value, -fwd.value, 1e-14);
}

TEST(AdaptiveSimpson, EmptyInterval) {
  EXPECT_EQ(adaptive_simpson([](double) { return 1.0; }, 0.5, 0.5).value, 0.0);
}

TEST(AdaptiveSimpson, NarrowPeakFoundWithEnoughPanels) {
  const double s = 1e-4;
  SimpsonOptions options;
  options.initial_panels = 4096;
  const auto r = adaptive_simpson(
      [s](double x) { return std::exp(-(x - 0.3) * (x - 0.3) / (2.0 * s * s)); }, 0.0, 1.0,
      options);
  EXPECT_NEAR(r.value / (std::sqrt(2.0 * std::numbers::pi) * s), 1.0, 1e-7);
}

TEST(AdaptiveSimpson, ReportedErrorCoversTrueError) {
  SimpsonOptions options;
  options.rel_tol = 1e-6;
  const auto r = adaptive_simpson([](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, -1.0, 1.0,
                                  options);
  const double truth = 0.4 * std::atan(5.0);
  EXPECT_LE(std::abs(r.value - truth), 10.0 * r.abs_error + 1e-15);
  EXPECT_LE(std::abs(r.value - truth), 1e-6 * truth);
}

TEST(AdaptiveSimpson, NonFiniteIntegrandThrows) {
  EXPECT_THROW(adaptive_simpson([](double x) { return 1.0 / (x - 0.25); }, 0.0, 1.0),
               NumericalError);
  EXPECT_THROW(adaptive_simpson([](double) { return NAN; }, 0.0, 1.0), NumericalError);
}

TEST(AdaptiveSimpson, DepthLimitCarriesPartialEstimate) {
  SimpsonOptions options;
  options.max_depth = 3;
  options.initial_panels = 1;
  options.rel_tol = 1e-14;
  try {
    adaptive_simpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, options);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_NEAR(e.partial_value(), 2.0 / 3.0, 1e-2);
    EXPECT_GT(e.partial_error(), 0.0);
  }
}

TEST(AdaptiveSimpson, EvaluationBudget) {
  SimpsonOptions options;
  options.max_evaluations = 50;
  options.rel_tol = 1e-14;
  EXPECT_THROW(adaptive_simpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, options),
               QuadratureError);
}

TEST(AdaptiveSimpson, RejectsBadOptions) {
  SimpsonOptions options;
  options.rel_tol = 0.0;
  EXPECT_THROW(adaptive_simpson([](double) { return 1.0; }, 0.0, 1.0, options), ValidationError);
  options = {};
  options.initial_panels = 0;
  EXPECT_THROW(adaptive_simpson([](double) { return 1.0; }, 0.0, 1.0, options), ValidationError);
  EXPECT_THROW(adaptive_simpson([](double) { return 1.0; }, 0.0, INFINITY), ValidationError);
}

}  // namespace
}  // namespace weakprobe
