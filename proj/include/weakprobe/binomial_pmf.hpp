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

namespace weakprobe {

/// Stirling-series remainder lgamma(n+1) - [(n+1/2) ln n - n + ln sqrt(2 pi)].
double stirling_error(double n);

/// Deviance term x ln(x/np) + np - x, stable when x is close to np.
double binomial_deviance(double x, double np);

/// Natural log of the binomial pmf C(n,x) p^x q^(n-x) with q = 1 - p passed
/// separately so callers can supply it without cancellation.
///
/// x may be any real in [0, n]; outside that range the result is -inf. Uses
/// the saddle-point form (stirling_error + binomial_deviance) away from the
/// boundaries and the log-gamma form when x or n-x is below one.
double log_binomial_pmf(double x, double n, double p, double q);

}  // namespace weakprobe
