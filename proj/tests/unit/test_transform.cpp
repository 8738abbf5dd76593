// Copyright 2026 The biozip Authors
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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "biozip/error.hpp"
#include "biozip/signal_io.hpp"
#include "biozip/transform.hpp"
#include "oracles.hpp"

namespace biozip {
namespace {

using testing::max_abs_diff;

constexpr double kSqrt2 = std::numbers::sqrt2;

CoefficientBlock block_of(TransformKind kind, std::vector<double> c, int levels = 1) {
  CoefficientBlock b;
  b.transform = kind;
  b.original_length = c.size();
  b.coefficients = std::move(c);
  b.dwt_levels = levels;
  return b;
}

TEST(Dct, PairOfOnes) {
  const std::vector<double> x{1.0, 1.0};
  const CoefficientBlock b = dct_forward(x);
  EXPECT_EQ(b.transform, TransformKind::kDct);
  EXPECT_EQ(b.original_length, 2u);
  ASSERT_EQ(b.coefficients.size(), 2u);
  EXPECT_NEAR(b.coefficients[0], kSqrt2, 1e-15);
  EXPECT_NEAR(b.coefficients[1], 0.0, 1e-15);
}

TEST(Dct, ZeroInput) {
  const std::vector<double> x(4, 0.0);
  EXPECT_EQ(dct_forward(x).coefficients, x);
}

TEST(Dct, SingleSampleIsIdentity) {
  const std::vector<double> x{-3.25};
  EXPECT_NEAR(dct_forward(x).coefficients[0], -3.25, 1e-15);
  EXPECT_NEAR(dct_inverse(block_of(TransformKind::kDct, {-3.25}))[0], -3.25, 1e-15);
}

TEST(Dct, MatchesDirectOracleOnRandomInputs) {
  std::mt19937_64 rng(16);
  for (std::size_t n : {1u, 2u, 3u, 5u, 16u, 17u, 31u, 64u}) {
    const auto x = testing::random_vector(rng, n, 3.0);
    const auto y = dct_forward(x).coefficients;
    EXPECT_LT(max_abs_diff(y, testing::direct_dct(x)), 1e-9) << "n=" << n;
  }
}

TEST(Dct, InverseMatchesDirectOracle) {
  std::mt19937_64 rng(17);
  for (std::size_t n : {1u, 4u, 7u, 40u}) {
    const auto c = testing::random_vector(rng, n);
    const auto x = dct_inverse(block_of(TransformKind::kDct, c));
    EXPECT_LT(max_abs_diff(x, testing::direct_idct(c)), 1e-9) << "n=" << n;
  }
}

TEST(Dct, InverseOfExample) {
  const auto x = dct_inverse(block_of(TransformKind::kDct, {kSqrt2, 0.0}));
  EXPECT_NEAR(x[0], 1.0, 1e-15);
  EXPECT_NEAR(x[1], 1.0, 1e-15);
}

TEST(Dct, InverseOfZerosIsZero) {
  const auto x = dct_inverse(block_of(TransformKind::kDct, std::vector<double>(9, 0.0)));
  EXPECT_EQ(x, std::vector<double>(9, 0.0));
}

TEST(Dct, RoundTripAndParsevalOnSynthSegment) {
  const RawSignal sig = synth_eeg(1.0, 256.0, 5);
  const CoefficientBlock b = dct_forward(sig.samples);
  EXPECT_LT(max_abs_diff(dct_inverse(b), sig.samples), 1e-9);
  const long double ex = testing::energy(sig.samples);
  const long double ey = testing::energy(b.coefficients);
  EXPECT_LT(std::abs(static_cast<double>((ex - ey) / ex)), 1e-9);
}

TEST(Dct, RejectsEmptyAndWrongKind) {
  EXPECT_THROW(dct_forward(std::vector<double>{}), Error);
  EXPECT_THROW(dct_inverse(block_of(TransformKind::kDwt, {1.0, 2.0})), Error);
}

TEST(Dwt, PairOfOnes) {
  const std::vector<double> x{1.0, 1.0};
  const CoefficientBlock b = dwt_forward(x, 1);
  EXPECT_EQ(b.transform, TransformKind::kDwt);
  EXPECT_EQ(b.dwt_levels, 1);
  EXPECT_NEAR(b.coefficients[0], kSqrt2, 1e-15);
  EXPECT_EQ(b.coefficients[1], 0.0);
}

TEST(Dwt, ConstantPairsHaveNoDetail) {
  const double a = 2.75;
  const std::vector<double> x{a, a, a, a};
  const auto c = dwt_forward(x, 1).coefficients;
  EXPECT_NEAR(c[0], a * kSqrt2, 1e-15);
  EXPECT_NEAR(c[1], a * kSqrt2, 1e-15);
  EXPECT_EQ(c[2], 0.0);
  EXPECT_EQ(c[3], 0.0);
}

TEST(Dwt, TwoLevelHandExample) {
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  const auto c = dwt_forward(x, 2).coefficients;
  const std::vector<double> expected{5.0, -2.0, -1.0 / kSqrt2, -1.0 / kSqrt2};
  EXPECT_LT(max_abs_diff(c, expected), 1e-14);
  const auto back = dwt_inverse(block_of(TransformKind::kDwt, expected, 2));
  EXPECT_LT(max_abs_diff(back, x), 1e-14);
}

TEST(Dwt, InverseOfOneLevelExample) {
  const auto x = dwt_inverse(block_of(TransformKind::kDwt, {kSqrt2, 0.0}, 1));
  EXPECT_NEAR(x[0], 1.0, 1e-15);
  EXPECT_NEAR(x[1], 1.0, 1e-15);
}

TEST(Dwt, InverseOfZerosIsZero) {
  const auto x = dwt_inverse(block_of(TransformKind::kDwt, std::vector<double>(16, 0.0), 3));
  EXPECT_EQ(x, std::vector<double>(16, 0.0));
}

TEST(Dwt, MatchesRecursiveOracle) {
  std::mt19937_64 rng(21);
  for (int levels = 1; levels <= 5; ++levels) {
    const auto x = testing::random_vector(rng, std::size_t{3} << (levels + 2));
    const auto c = dwt_forward(x, levels).coefficients;
    EXPECT_LT(max_abs_diff(c, testing::recursive_haar(x, levels)), 1e-12) << levels;
  }
}

TEST(Dwt, RoundTripAndParseval) {
  std::mt19937_64 rng(22);
  for (int levels = 1; levels <= 3; ++levels) {
    const auto x = testing::random_vector(rng, 512, 10.0);
    const CoefficientBlock b = dwt_forward(x, levels);
    EXPECT_LT(max_abs_diff(dwt_inverse(b), x), 1e-9);
    const long double ex = testing::energy(x);
    EXPECT_LT(std::abs(static_cast<double>((ex - testing::energy(b.coefficients)) / ex)), 1e-12);
  }
}

TEST(Dwt, RejectsIndivisibleLengthAndBadLevels) {
  const std::vector<double> x(6, 1.0);
  EXPECT_THROW(dwt_forward(x, 2), Error);
  EXPECT_THROW(dwt_forward(x, 0), Error);
  EXPECT_THROW(dwt_forward(x, kMaxDwtLevels + 1), Error);
  EXPECT_THROW(dwt_forward(std::vector<double>{}, 1), Error);
  EXPECT_THROW(dwt_inverse(block_of(TransformKind::kDwt, x, 2)), Error);
  EXPECT_THROW(dwt_inverse(block_of(TransformKind::kDct, {1.0, 1.0}, 1)), Error);
}

TEST(DwtPadLength, Values) {
  EXPECT_EQ(dwt_pad_length(7, 1), 1u);
  EXPECT_EQ(dwt_pad_length(8, 1), 0u);
  EXPECT_EQ(dwt_pad_length(9, 3), 7u);
  EXPECT_EQ(dwt_pad_length(341, 3), 3u);
  EXPECT_EQ(dwt_pad_length(1, 1), 1u);
  EXPECT_EQ(dwt_pad_length(1024, 10), 0u);
  EXPECT_THROW(dwt_pad_length(8, 0), Error);
}

TEST(ThresholdSpec, Domain) {
  EXPECT_NO_THROW(ThresholdSpec(0.0));
  EXPECT_NO_THROW(ThresholdSpec(1.0));
  EXPECT_THROW(ThresholdSpec(-0.01), Error);
  EXPECT_THROW(ThresholdSpec(1.5), Error);
  EXPECT_THROW(ThresholdSpec(std::numeric_limits<double>::quiet_NaN()), Error);
  EXPECT_EQ(ThresholdSpec(0.25).ratio(), 0.25);
}

TEST(Threshold, DropsSmallRatios) {
  const auto r = threshold(block_of(TransformKind::kDct, {10.0, 1.0, 0.04}), ThresholdSpec(0.05));
  EXPECT_EQ(r.block.coefficients, (std::vector<double>{10.0, 1.0, 0.0}));
  EXPECT_EQ(r.retained_count, 2u);
}

TEST(Threshold, ZeroRatioKeepsEverything) {
  std::mt19937_64 rng(4);
  auto c = testing::random_vector(rng, 50);
  c[3] = 0.0;
  c[9] = 0.0;
  const auto r = threshold(block_of(TransformKind::kDct, c), ThresholdSpec(0.0));
  EXPECT_TRUE(testing::bit_equal(r.block.coefficients, c));
  EXPECT_EQ(r.retained_count, 48u);
}

TEST(Threshold, RatioOneDropsEvenTheMaximum) {
  const auto r = threshold(block_of(TransformKind::kDct, {5.0, -5.0, 2.0}), ThresholdSpec(1.0));
  EXPECT_EQ(r.block.coefficients, (std::vector<double>{0.0, 0.0, 0.0}));
  EXPECT_EQ(r.retained_count, 0u);
}

TEST(Threshold, BoundaryIsInclusive) {
  const auto r = threshold(block_of(TransformKind::kDct, {4.0, 1.0, -1.0}), ThresholdSpec(0.25));
  EXPECT_EQ(r.block.coefficients, (std::vector<double>{4.0, 0.0, 0.0}));
}

TEST(Threshold, ZeroedEntriesArePositiveZero) {
  const auto r = threshold(block_of(TransformKind::kDct, {-8.0, -0.001, -0.0}), ThresholdSpec(0.5));
  EXPECT_FALSE(std::signbit(r.block.coefficients[1]));
  EXPECT_FALSE(std::signbit(r.block.coefficients[2]));
}

TEST(Threshold, AllZeroBlockIsUnchanged) {
  const auto c = std::vector<double>(6, 0.0);
  const auto r = threshold(block_of(TransformKind::kDwt, c, 1), ThresholdSpec(0.3));
  EXPECT_EQ(r.block.coefficients, c);
  EXPECT_EQ(r.retained_count, 0u);
  EXPECT_EQ(r.block.transform, TransformKind::kDwt);
}

TEST(Threshold, MonotoneAndIdempotent) {
  std::mt19937_64 rng(8);
  const auto c = testing::random_vector(rng, 300, 2.0);
  const auto block = block_of(TransformKind::kDct, c);
  std::size_t previous = c.size() + 1;
  for (double t : {0.0, 0.01, 0.05, 0.1, 0.3, 0.6, 0.99, 1.0}) {
    const auto r = threshold(block, ThresholdSpec(t));
    EXPECT_LE(r.retained_count, previous);
    previous = r.retained_count;
    const auto again = threshold(r.block, ThresholdSpec(t));
    if (t < 1.0) {
      EXPECT_TRUE(testing::bit_equal(again.block.coefficients, r.block.coefficients)) << t;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double v = r.block.coefficients[i];
      EXPECT_TRUE(v == 0.0 || v == c[i]);
    }
  }
}

}  // namespace
}  // namespace biozip
