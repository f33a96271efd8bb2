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

#include "weakprobe/binomial_sampler.hpp"

#include <cmath>
#include <numbers>

#include "weakprobe/error.hpp"

namespace weakprobe {

namespace {

constexpr double kInversionCutoff = 10.0;

std::int64_t sample_inversion(std::int64_t n, double p, TrialStream& stream) {
  const double q = 1.0 - p;
  const double odds = p / q;
  const double a = static_cast<double>(n + 1) * odds;
  const double start = std::exp(static_cast<double>(n) * std::log1p(-p));
  for (;;) {
    double u = stream.next_uniform();
    double r = start;
    std::int64_t x = 0;
    while (u > r) {
      u -= r;
      ++x;
      if (x > n) break;  // rounding ate the tail; redraw
      r *= a / static_cast<double>(x) - odds;
    }
    if (x <= n) return x;
  }
}

// lgamma(k+1) - [(k+1/2) ln(k+1) - (k+1) + ln sqrt(2 pi)]
double stirling_tail(double k) {
  static constexpr double kTable[10] = {
      0.08106146679532726, 0.04134069595540929, 0.02767792568499834,
      0.02079067210376509, 0.01664469118982119, 0.01387612882307075,
      0.01189670994589177, 0.01041126526197210, 0.009255462182712733,
      0.008330563433362871};
  if (k <= 9.0) return kTable[static_cast<int>(k)];
  const double kp1 = k + 1.0;
  const double kp1sq = kp1 * kp1;
  return (1.0 / 12.0 - (1.0 / 360.0 - 1.0 / 1260.0 / kp1sq) / kp1sq) / kp1;
}

std::int64_t sample_btrs(std::int64_t n, double p, TrialStream& stream) {
  const double nd = static_cast<double>(n);
  const double q = 1.0 - p;
  const double spq = std::sqrt(nd * p * q);
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = nd * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double r = p / q;
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double mode = std::floor((nd + 1.0) * p);
  const double mode_term = (mode + 0.5) * std::log((mode + 1.0) / (r * (nd - mode + 1.0))) +
                           stirling_tail(mode) + stirling_tail(nd - mode);
  for (;;) {
    const double u = stream.next_uniform() - 0.5;
    double v = stream.next_uniform();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + c);
    if (k < 0.0 || k > nd) continue;
    if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(k);
    v = std::log(v * alpha / (a / (us * us) + b));
    const double bound = mode_term + (nd + 1.0) * std::log((nd - mode + 1.0) / (nd - k + 1.0)) +
                         (k + 0.5) * std::log(r * (nd - k + 1.0) / (k + 1.0)) -
                         stirling_tail(k) - stirling_tail(nd - k);
    if (v <= bound) return static_cast<std::int64_t>(k);
  }
}

}  // namespace

std::int64_t sample_binomial(std::int64_t n, double p, TrialStream& stream) {
  if (n < 0) throw ValidationError("binomial trial count must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("binomial probability must lie in [0, 1]");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  const bool flipped = p > 0.5;
  const double small = flipped ? 1.0 - p : p;
  const std::int64_t draw = static_cast<double>(n) * small < kInversionCutoff
                                ? sample_inversion(n, small, stream)
                                : sample_btrs(n, small, stream);
  return flipped ? n - draw : draw;
}

}  // namespace weakprobe
