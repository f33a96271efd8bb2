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
#include <cstdint>
#include <map>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include "weakprobe/binomial_sampler.hpp"
#include "weakprobe/core_model.hpp"
#include "weakprobe/likelihood.hpp"
#include "weakprobe/montecarlo.hpp"
#include "weakprobe/philox.hpp"

namespace weakprobe {
namespace {

// Known-answer vectors from the Random123 distribution.
TEST(Philox, KnownAnswers) {
  using C = Philox4x32::Counter;
  using K = Philox4x32::Key;
  EXPECT_EQ(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}),
            (C{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
  EXPECT_EQ(Philox4x32::block(C{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                              K{0xffffffffu, 0xffffffffu}),
            (C{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
  EXPECT_EQ(Philox4x32::block(C{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                              K{0xa4093822u, 0x299f31d0u}),
            (C{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(TrialStream, ReproducibleAndDistinct) {
  TrialStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    EXPECT_NE(x, c.next_u64());
    EXPECT_NE(x, d.next_u64());
  }
}

TEST(TrialStream, UniformOpenIntervalAndMoments) {
  TrialStream s(1, 0);
  constexpr int n = 1'000'000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = s.next_uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sum2 += u * u;
  }
  EXPECT_NEAR(sum / n, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / n));
  EXPECT_NEAR(sum2 / n - (sum / n) * (sum / n), 1.0 / 12.0, 1e-3);
}

using Histogram = std::map<std::int64_t, double>;

// Pearson statistic against expected counts, pooling cells below 5 expected.
struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
};

ChiSquare goodness_of_fit(const Histogram& observed, const std::vector<double>& expected) {
  ChiSquare out;
  double obs_pool = 0.0, exp_pool = 0.0;
  int cells = 0;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const auto it = observed.find(static_cast<std::int64_t>(k));
    obs_pool += it == observed.end() ? 0.0 : it->second;
    exp_pool += expected[k];
    if (exp_pool >= 5.0) {
      out.statistic += (obs_pool - exp_pool) * (obs_pool - exp_pool) / exp_pool;
      obs_pool = exp_pool = 0.0;
      ++cells;
    }
  }
  if (exp_pool > 0.0) {
    out.statistic += (obs_pool - exp_pool) * (obs_pool - exp_pool) / exp_pool;
    ++cells;
  }
  out.dof = cells - 1;
  return out;
}

double critical_value(int dof) {
  return boost::math::quantile(boost::math::chi_squared(dof), 0.999);
}

TEST(BinomialSampler, MatchesExactPmf) {
  const ProbeSpec probe(0.1, 1.0);
  constexpr int draws = 1'000'000;
  for (const std::int64_t m : {1, 10, 100, 1000}) {
    for (const double phi : {0.0, 1e-4, 0.004}) {
      Histogram hist;
      for (int t = 0; t < draws; ++t) {
        TrialStream stream(20150721, static_cast<std::uint64_t>(t));
        ++hist[sample_tally(probe, Phase(phi), m, stream)];
      }
      std::vector<double> expected(static_cast<std::size_t>(m) + 1);
      for (std::int64_t k = 0; k <= m; ++k) {
        expected[k] = draws * std::exp(log_likelihood_exact(OutcomeTally(k, m), probe, Phase(phi)));
      }
      const auto chi = goodness_of_fit(hist, expected);
      ASSERT_GT(chi.dof, 0);
      EXPECT_LT(chi.statistic, critical_value(chi.dof)) << "m=" << m << " phi=" << phi;
    }
  }
}

TEST(BinomialSampler, BothAlgorithmsAndReflection) {
  constexpr int draws = 400'000;
  // inversion (n min(p,q) < 10), rejection, and their reflections
  for (const auto& [n, p] : {std::pair<std::int64_t, double>{1000, 0.004},
                             {1000, 0.996},
                             {50, 0.15},
                             {20000, 0.3},
                             {20000, 0.7},
                             {200, 0.5}}) {
    Histogram hist;
    TrialStream stream(99, static_cast<std::uint64_t>(n));
    double sum = 0.0;
    for (int t = 0; t < draws; ++t) {
      const auto k = sample_binomial(n, p, stream);
      ASSERT_GE(k, 0);
      ASSERT_LE(k, n);
      ++hist[k];
      sum += static_cast<double>(k);
    }
    std::vector<double> expected(static_cast<std::size_t>(n) + 1);
    for (std::int64_t k = 0; k <= n; ++k) {
      const double x = static_cast<double>(k);
      const double nn = static_cast<double>(n);
      expected[k] = draws * std::exp(std::lgamma(nn + 1) - std::lgamma(x + 1) -
                                     std::lgamma(nn - x + 1) + x * std::log(p) +
                                     (nn - x) * std::log1p(-p));
    }
    const auto chi = goodness_of_fit(hist, expected);
    EXPECT_LT(chi.statistic, critical_value(chi.dof)) << "n=" << n << " p=" << p;
    EXPECT_NEAR(sum / draws, n * p, 4.0 * std::sqrt(n * p * (1 - p) / draws));
  }
}

TEST(BinomialSampler, DegenerateProbabilities) {
  TrialStream stream(1, 1);
  EXPECT_EQ(sample_binomial(17, 0.0, stream), 0);
  EXPECT_EQ(sample_binomial(17, 1.0, stream), 17);
  EXPECT_EQ(sample_binomial(0, 0.4, stream), 0);
}

// Homogeneity against summing m independent Bernoulli draws.
TEST(BinomialSampler, AgreesWithBernoulliSum) {
  const ProbeSpec probe(0.1, 1.0);
  const double p = outcome_probability(probe, Phase(1e-3), Outcome::kPlus);
  for (const auto& [m, draws] : {std::pair<std::int64_t, int>{1, 200'000},
                                 {10, 200'000},
                                 {100, 100'000},
                                 {1000, 20'000}}) {
    Histogram fast, slow;
    for (int t = 0; t < draws; ++t) {
      TrialStream a(7, static_cast<std::uint64_t>(t));
      ++fast[sample_tally(probe, Phase(1e-3), m, a)];
      TrialStream b(8, static_cast<std::uint64_t>(t));
      std::int64_t k = 0;
      for (std::int64_t i = 0; i < m; ++i) k += b.next_uniform() < p ? 1 : 0;
      ++slow[k];
    }
    // 2 x K contingency table with pooling of sparse columns
    double stat = 0.0, pool_a = 0.0, pool_b = 0.0;
    int cols = 0;
    const auto flush = [&] {
      const double tot = pool_a + pool_b;
      const double ea = tot * 0.5;
      stat += (pool_a - ea) * (pool_a - ea) / ea + (pool_b - ea) * (pool_b - ea) / ea;
      pool_a = pool_b = 0.0;
      ++cols;
    };
    for (std::int64_t k = 0; k <= m; ++k) {
      pool_a += fast.count(k) ? fast[k] : 0.0;
      pool_b += slow.count(k) ? slow[k] : 0.0;
      if (pool_a + pool_b >= 20.0) flush();
    }
    if (pool_a + pool_b > 0.0) flush();
    ASSERT_GT(cols, 1);
    EXPECT_LT(stat, critical_value(cols - 1)) << "m=" << m;
  }
}

TEST(SampleTally, SymmetricAtZeroPhase) {
  const ProbeSpec probe(0.1, 1.0);
  constexpr int draws = 100'000;
  constexpr std::int64_t m = 1000;
  double sum = 0.0;
  for (int t = 0; t < draws; ++t) {
    TrialStream s(3, static_cast<std::uint64_t>(t));
    sum += static_cast<double>(sample_tally(probe, Phase(0.0), m, s));
  }
  EXPECT_NEAR(sum / draws, 500.0, 4.0 * std::sqrt(250.0 / draws));
}

TEST(SampleTally, Fig1PresetMean) {
  const ProbeSpec probe(0.1, 1.0);
  constexpr int draws = 20'000;
  constexpr std::int64_t m = 1'000'000;
  const double p = outcome_probability(probe, Phase(1e-4), Outcome::kPlus);
  EXPECT_NEAR(m * p, 500995.0, 0.5);
  double sum = 0.0;
  for (int t = 0; t < draws; ++t) {
    TrialStream s(4, static_cast<std::uint64_t>(t));
    sum += static_cast<double>(sample_tally(probe, Phase(1e-4), m, s));
  }
  EXPECT_NEAR(sum / draws, m * p, 4.0 * std::sqrt(m * p * (1 - p) / draws));
}

}  // namespace
}  // namespace weakprobe
