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

#include "weakprobe/binomial_pmf.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace weakprobe {

namespace {

const double kLnSqrt2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

}  // namespace

double stirling_error(double n) {
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  if (n <= 15.0) {
    return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n - kLnSqrt2Pi;
  }
  const double nn = n * n;
  if (n > 500.0) return (s0 - s1 / nn) / n;
  if (n > 80.0) return (s0 - (s1 - s2 / nn) / nn) / n;
  if (n > 35.0) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

double binomial_deviance(double x, double np) {
  if (std::abs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double next = s + ej / (2 * j + 1);
      if (next == s) return next;
      s = next;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

double log_binomial_pmf(double x, double n, double p, double q) {
  if (x < 0.0 || x > n) return -std::numeric_limits<double>::infinity();
  if (x == 0.0) return n * std::log(q);
  if (x == n) return n * std::log(p);
  if (x < 1.0 || n - x < 1.0) {
    return std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0) +
           x * std::log(p) + (n - x) * std::log(q);
  }
  const double lc = stirling_error(n) - stirling_error(x) - stirling_error(n - x) -
                    binomial_deviance(x, n * p) - binomial_deviance(n - x, n * q);
  // ln(2 pi x (n-x) / n)
  const double lf = 2.0 * kLnSqrt2Pi + std::log(x) + std::log1p(-x / n);
  return lc - 0.5 * lf;
}

}  // namespace weakprobe
