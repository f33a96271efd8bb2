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

#include "weakprobe/philox.hpp"

namespace weakprobe {

/// Exact Binomial(n, p) draw.
///
/// Works on min(p, 1-p) and reflects. Sequential inversion when
/// n*min(p,1-p) < 10, otherwise Hormann's BTRS transformed rejection with
/// squeeze. Both consume uniforms from `stream` only.
std::int64_t sample_binomial(std::int64_t n, double p, TrialStream& stream);

}  // namespace weakprobe
