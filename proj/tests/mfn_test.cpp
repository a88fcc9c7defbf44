// Copyright 2026 The hrrp-mfn Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "hrrp/mfn.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace hrrp {
namespace {

double total_variation(const std::vector<double>& x) {
  double tv = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) tv += std::abs(x[i] - x[i - 1]);
  return tv;
}

std::vector<double> random_profile(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> x(n);
  const std::size_t lo = rng() % n;
  const std::size_t hi = std::min(n, lo + 1 + rng() % 80);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = (i >= lo && i < hi ? 3.0 : 0.05) * e(rng);
  }
  return x;
}

TEST(MeanCoiAmplitude, AveragesMaskedCells) {
  const std::vector<double> x = {0.0, 2.0, 4.0, 9.0};
  EXPECT_DOUBLE_EQ(mean_coi_amplitude(x, CoiMask::from_bits({0, 1, 1, 0})), 3.0);
  EXPECT_THROW(mean_coi_amplitude(x, CoiMask::from_bits({0, 0, 0, 0})),
               DegenerateInputError);
}

TEST(SoftMask, DecaysWithDistance) {
  Bits coi(30, 0);
  coi[10] = 1;
  const auto s = smooth_with_distance(coi, 2.0);
  EXPECT_EQ(s[10], 1.0);
  EXPECT_DOUBLE_EQ(s[12], std::exp(-4.0));
  EXPECT_DOUBLE_EQ(s[9], std::exp(-2.0));
  EXPECT_THROW(smooth_with_distance(Bits(5, 0), 2.0), DegenerateInputError);
}

TEST(SoftMask, MatchesExhaustiveDistance) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    Bits b(1 + rng() % 256, 0);
    b[rng() % b.size()] = 1;
    for (auto& v : b) v = v || rng() % 17 == 0;
    const auto s = smooth_with_distance(b, 2.0);
    ASSERT_EQ(s, oracle::soft_mask(b, 2.0));
    for (std::size_t i = 0; i < b.size(); ++i) {
      ASSERT_GT(s[i], 0.0);
      ASSERT_LE(s[i], 1.0);
      if (b[i]) ASSERT_EQ(s[i], 1.0);
    }
  }
}

TEST(GaussianFilter, KernelShape) {
  const auto k = gaussian_kernel(0.5);
  ASSERT_EQ(k.size(), 5u);  // radius ceil(4 * 0.5) = 2
  double total = 0.0;
  for (double w : k) total += w;
  EXPECT_NEAR(total, 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(k[0], k[4]);
  EXPECT_GT(k[2], k[1]);
  EXPECT_THROW(gaussian_kernel(0.0), ParameterError);
}

TEST(GaussianFilter, TinySigmaIsIdentity) {
  std::mt19937_64 rng(22);
  const auto x = random_profile(rng, 128);
  const auto y = gaussian_filter_1d(x, 0.05);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(y[i], x[i], 1e-12);
}

TEST(GaussianFilter, ImpulseMatchesDirectKernel) {
  std::vector<double> x(41, 0.0);
  x[20] = 1.0;
  const auto y = gaussian_filter_1d(x, 0.5);
  const auto expect = oracle::gauss(x, 0.5);
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(y[i], expect[i], 1e-15);
  const double e2 = std::exp(-2.0), e8 = std::exp(-8.0);
  const double norm = 1.0 + 2.0 * e2 + 2.0 * e8;
  EXPECT_NEAR(y[20], 1.0 / norm, 1e-15);
  EXPECT_NEAR(y[21], e2 / norm, 1e-15);
  EXPECT_NEAR(y[22], e8 / norm, 1e-15);
  EXPECT_EQ(y[23], 0.0);
}

TEST(MfnDecompose, PulseInteriorHasNoNoise) {
  std::vector<double> x(256, 0.0);
  for (int i = 100; i <= 150; ++i) x[i] = 1.0;
  const auto c = mfn_decompose(x, DecompositionParams{});
  for (int i = 103; i <= 147; ++i) EXPECT_LE(std::abs(c.n[i]), 1e-6) << i;
  for (int i = 100; i <= 150; ++i) EXPECT_DOUBLE_EQ(c.m[i], 1.0);
}

TEST(MfnDecompose, EmptyMaskRoutesEverythingToNoise) {
  const std::vector<double> x(32, 0.0);
  const auto c = mfn_decompose(x, DecompositionParams{});
  EXPECT_EQ(c.m, x);
  EXPECT_EQ(c.f, x);
  EXPECT_EQ(c.n, x);
}

TEST(MfnDecompose, ReconstructsAndMatchesOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_profile(rng, 16 + rng() % 240);
    DecompositionParams p;
    p.sigma = std::vector<double>{0.1, 0.5, 2.0, 8.0}[trial % 4];
    const auto mask = coi_mask(x, p.seg);
    const auto c = mfn_decompose(x, mask, p);
    const auto o = oracle::mfn(x, mask.bits, p.sigma, p.decay_rate);
    const double peak = *std::max_element(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
      ASSERT_LE(std::abs(c.f[i] + c.n[i] - x[i]), 1e-12 * std::max(1.0, peak));
      ASSERT_NEAR(c.f[i], o.f[i], 1e-12 * std::max(1.0, peak));
      ASSERT_EQ(c.m[i], o.m[i]);
    }
    EXPECT_EQ(c.sigma, p.sigma);
  }
}

TEST(MfnDecompose, ScaleEquivariant) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_profile(rng, 200);
    const auto base = mfn_decompose(x, DecompositionParams{});
    for (double alpha : {0.5, 4.0, 3.0}) {
      auto y = x;
      for (auto& v : y) v *= alpha;
      const auto c = mfn_decompose(y, DecompositionParams{});
      for (std::size_t i = 0; i < x.size(); ++i) {
        ASSERT_NEAR(c.m[i], alpha * base.m[i], 1e-12 * alpha * (1 + base.m[i]));
        ASSERT_NEAR(c.f[i], alpha * base.f[i], 1e-12 * alpha * (1 + base.f[i]));
      }
    }
  }
}

TEST(MfnDecompose, SmoothingLowersTotalVariation) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_profile(rng, 256);
    const auto mask = coi_mask(x, {});
    if (mask.empty()) continue;
    const auto soft = smooth_with_distance(mask.bits, 2.0);
    std::vector<double> weighted(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) weighted[i] = x[i] * soft[i];
    double previous = total_variation(weighted);
    for (double sigma : {0.5, 1.0, 2.0, 4.0, 8.0}) {
      DecompositionParams p;
      p.sigma = sigma;
      const double tv = total_variation(mfn_decompose(x, mask, p).f);
      ASSERT_LE(tv, previous * (1 + 1e-12)) << "sigma " << sigma;
      previous = tv;
    }
  }
}

TEST(MfnDecompose, ComponentsStayBounded) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_profile(rng, 256);
    const auto c = mfn_decompose(x, DecompositionParams{});
    const double peak = *std::max_element(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
      ASSERT_GE(c.f[i], 0.0);
      ASSERT_LE(c.f[i], peak);
      ASSERT_GE(c.m[i], 0.0);
    }
  }
}

TEST(DecompositionParams, Validation) {
  DecompositionParams p;
  p.sigma = 0.0;
  EXPECT_THROW(p.validate(), ParameterError);
  p = {};
  p.decay_rate = -1.0;
  EXPECT_THROW(p.validate(), ParameterError);
  const std::vector<double> x(8, 1.0);
  EXPECT_THROW(mfn_decompose(x, CoiMask::from_bits(Bits(7, 1)), DecompositionParams{}),
               ParameterError);
}

}  // namespace
}  // namespace hrrp
