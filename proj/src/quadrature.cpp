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

#include "weakprobe/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "weakprobe/error.hpp"

namespace weakprobe {

namespace {

struct Segment {
  double a, fa, m, fm, b, fb, whole, eps;
  int depth;
};

class Integrator {
 public:
  Integrator(const std::function<double(double)>& f, const SimpsonOptions& options)
      : f_(f), options_(options) {}

  double eval(double x) {
    ++evaluations_;
    const double y = f_(x);
    if (!std::isfinite(y)) {
      throw QuadratureError("integrand is not finite at x=" + std::to_string(x), sum_, error_);
    }
    return y;
  }

  // Explicit stack instead of recursion; depth is bounded by max_depth anyway.
  void refine(Segment root) {
    std::vector<Segment> stack{root};
    while (!stack.empty()) {
      Segment s = stack.back();
      stack.pop_back();
      const double lm = 0.5 * (s.a + s.m);
      const double rm = 0.5 * (s.m + s.b);
      const double flm = eval(lm);
      const double frm = eval(rm);
      const double left = (s.m - s.a) / 6.0 * (s.fa + 4.0 * flm + s.fm);
      const double right = (s.b - s.m) / 6.0 * (s.fm + 4.0 * frm + s.fb);
      const double delta = left + right - s.whole;
      if (std::abs(delta) <= 15.0 * s.eps) {
        sum_ += left + right + delta / 15.0;
        error_ += std::abs(delta);
        continue;
      }
      if (s.depth >= options_.max_depth || evaluations_ >= options_.max_evaluations) {
        sum_ += left + right + delta / 15.0;
        error_ += std::abs(delta);
        for (const Segment& rest : stack) sum_ += rest.whole;
        throw QuadratureError(s.depth >= options_.max_depth
                                  ? "adaptive Simpson reached the depth limit"
                                  : "adaptive Simpson exhausted its evaluation budget",
                              sum_, error_);
      }
      const double half = 0.5 * s.eps;
      // Push right first so the left half is refined first.
      stack.push_back({s.m, s.fm, rm, frm, s.b, s.fb, right, half, s.depth + 1});
      stack.push_back({s.a, s.fa, lm, flm, s.m, s.fm, left, half, s.depth + 1});
    }
  }

  double sum() const { return sum_; }
  double error() const { return error_; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  const std::function<double(double)>& f_;
  SimpsonOptions options_;
  double sum_ = 0.0;
  double error_ = 0.0;
  std::size_t evaluations_ = 0;
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const SimpsonOptions& options) {
  if (!(options.rel_tol > 0.0)) throw ValidationError("quadrature tolerance must be positive");
  if (options.initial_panels < 1) throw ValidationError("quadrature needs at least one panel");
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw ValidationError("quadrature limits must be finite");
  }
  if (a == b) return {0.0, 0.0, 0};

  Integrator integrator(f, options);
  const int panels = options.initial_panels;
  const double width = (b - a) / panels;

  // Two samples per panel plus ends give a composite Simpson magnitude estimate.
  std::vector<double> x(2 * panels + 1);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = (i + 1 == x.size()) ? b : a + 0.5 * width * static_cast<double>(i);
    y[i] = integrator.eval(x[i]);
  }
  double coarse = 0.0;
  for (int p = 0; p < panels; ++p) {
    coarse += std::abs(x[2 * p + 2] - x[2 * p]) / 6.0 *
              (std::abs(y[2 * p]) + 4.0 * std::abs(y[2 * p + 1]) + std::abs(y[2 * p + 2]));
  }
  // A zero coarse magnitude still needs a usable target.
  const double target = std::max({options.rel_tol * coarse, options.abs_tol,
                                  std::numeric_limits<double>::min()});
  const double panel_eps = target / panels;

  std::vector<double> wholes(panels);
  for (int p = 0; p < panels; ++p) {
    wholes[p] = (x[2 * p + 2] - x[2 * p]) / 6.0 * (y[2 * p] + 4.0 * y[2 * p + 1] + y[2 * p + 2]);
  }
  for (int p = 0; p < panels; ++p) {
    try {
      integrator.refine({x[2 * p], y[2 * p], x[2 * p + 1], y[2 * p + 1], x[2 * p + 2],
                         y[2 * p + 2], wholes[p], panel_eps, 0});
    } catch (const QuadratureError& e) {
      // Unvisited panels enter the partial estimate at their coarse values.
      double partial = e.partial_value();
      for (int q = p + 1; q < panels; ++q) partial += wholes[q];
      throw QuadratureError(e.what(), partial, e.partial_error());
    }
  }
  return {integrator.sum(), integrator.error(), integrator.evaluations()};
}

}  // namespace weakprobe
