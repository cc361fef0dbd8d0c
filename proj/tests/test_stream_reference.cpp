// Copyright 2026 The compsum Authors
//
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

#include <bit>
#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "compsum/reference.hpp"
#include "compsum/rng.hpp"
#include "compsum/stream.hpp"

namespace compsum {
namespace {

TEST(SplitMix64, KnownOutputs) {
  // Reference outputs of SplitMix64 seeded with 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng(), 0x06C45D188009454FULL);
  EXPECT_EQ(SplitMix64::at(0, 2), 0x06C45D188009454FULL);
  SplitMix64 other(1234567);
  for (std::uint64_t i = 0; i < 100; ++i) EXPECT_EQ(other(), SplitMix64::at(1234567, i));
}

TEST(Precision, Names) {
  EXPECT_EQ(parse_precision("f32"), Precision::binary32);
  EXPECT_EQ(parse_precision("binary64"), Precision::binary64);
  EXPECT_EQ(to_string(Precision::binary32), "f32");
  EXPECT_EQ(mantissa_digits(Precision::binary64), 53);
  EXPECT_THROW(parse_precision("f16"), std::invalid_argument);
}

TEST(Stream, DefaultCutoffs) {
  EXPECT_EQ(default_exponent_cutoff(Precision::binary32), 247u);
  EXPECT_EQ(default_exponent_cutoff(Precision::binary64), 2000u);
}

TEST(Stream, RespectsCutoffAndIsFinite) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto f = draw_stream_f32(make_stream_spec(Precision::binary32, 50000, seed));
    ASSERT_EQ(f.size(), 50000u);
    std::uint32_t max_exp = 0;
    for (float x : f) {
      ASSERT_TRUE(std::isfinite(x));
      ASSERT_LT(biased_exponent(x), 247u);
      max_exp = std::max(max_exp, biased_exponent(x));
    }
    EXPECT_EQ(max_exp, 246u);
    const auto d = draw_stream_f64(make_stream_spec(Precision::binary64, 50000, seed));
    ASSERT_EQ(d.size(), 50000u);
    for (double x : d) {
      ASSERT_TRUE(std::isfinite(x));
      ASSERT_LT(biased_exponent(x), 2000u);
    }
  }
}

TEST(Stream, DeterministicPerSeedAndPrefixStable) {
  const auto a = draw_stream_f64(make_stream_spec(Precision::binary64, 1000, 42));
  const auto b = draw_stream_f64(make_stream_spec(Precision::binary64, 1000, 42));
  const auto c = draw_stream_f64(make_stream_spec(Precision::binary64, 1000, 43));
  const auto longer = draw_stream_f64(make_stream_spec(Precision::binary64, 2000, 42));
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(std::bit_cast<std::uint64_t>(a[i]), std::bit_cast<std::uint64_t>(b[i]));
    EXPECT_EQ(std::bit_cast<std::uint64_t>(a[i]), std::bit_cast<std::uint64_t>(longer[i]));
  }
  EXPECT_NE(std::bit_cast<std::uint64_t>(a[0]), std::bit_cast<std::uint64_t>(c[0]));
  const auto f = draw_stream_f32(make_stream_spec(Precision::binary32, 1001, 42));
  const auto g = draw_stream_f32(make_stream_spec(Precision::binary32, 1000, 42));
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(f[i], g[i]);
}

TEST(Stream, FirstBinary64DrawIsTheFirstAcceptedGeneratorOutput) {
  const auto d = draw_stream_f64(make_stream_spec(Precision::binary64, 1, 7));
  std::uint64_t i = 0;
  while (biased_exponent(std::bit_cast<double>(SplitMix64::at(7, i))) >= 2000) ++i;
  EXPECT_EQ(std::bit_cast<std::uint64_t>(d[0]), SplitMix64::at(7, i));
}

TEST(Stream, EmptyAndInvalidSpecs) {
  EXPECT_TRUE(draw_stream_f32(make_stream_spec(Precision::binary32, 0, 1)).empty());
  EXPECT_TRUE(draw_stream_f64(make_stream_spec(Precision::binary64, 0, 1)).empty());
  EXPECT_THROW(draw_stream_f32(make_stream_spec(Precision::binary64, 4, 1)), std::invalid_argument);
  EXPECT_THROW(draw_stream_f64(make_stream_spec(Precision::binary32, 4, 1)), std::invalid_argument);
  RandomStreamSpec bad = make_stream_spec(Precision::binary32, 4, 1);
  bad.exponent_cutoff = 0;
  EXPECT_THROW(draw_stream_f32(bad), std::invalid_argument);
  bad.exponent_cutoff = 256;
  EXPECT_THROW(draw_stream_f32(bad), std::invalid_argument);
}

TEST(ExactAccumulator, TinyTermSurvivesCancellation) {
  const std::vector<double> xs{1.0, -1.0, 0x1p-50};
  const auto r = exact_reference<double>(xs);
  EXPECT_EQ(r.sum, ExactValue(BigInt(1), -50));
  EXPECT_EQ(r.sum_abs, ExactValue(BigInt(2), 0) + ExactValue(BigInt(1), -50));
}

TEST(ExactAccumulator, ExtremesAndSigns) {
  ExactAccumulator acc;
  EXPECT_TRUE(acc.is_zero());
  const double big = std::numeric_limits<double>::max();
  const double tiny = std::numeric_limits<double>::denorm_min();
  for (int i = 0; i < 1000; ++i) acc.add(big);
  acc.add(-tiny);
  EXPECT_EQ(acc.sign(), 1);
  EXPECT_EQ(acc.value(),
            ExactValue::from_double(big).scaled(BigInt(1000)) - ExactValue::from_double(tiny));
  for (int i = 0; i < 2000; ++i) acc.add(-big);
  EXPECT_EQ(acc.sign(), -1);
  EXPECT_EQ(acc.value(),
            -ExactValue::from_double(big).scaled(BigInt(1000)) - ExactValue::from_double(tiny));
  EXPECT_THROW(acc.add(std::numeric_limits<double>::infinity()), std::invalid_argument);
  EXPECT_THROW(acc.add(std::nan("")), std::invalid_argument);
  ExactAccumulator z;
  z.add(-0.0);
  z.add(0.0);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.sign(), 0);
}

TEST(ExactAccumulator, AgreesWithArbitraryPrecisionSummation) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto d = draw_stream_f64(make_stream_spec(Precision::binary64, 3000, seed));
    ExactValue sum, sum_abs;
    for (double x : d) {
      sum += ExactValue::from_double(x);
      sum_abs += ExactValue::from_double(std::abs(x));
    }
    const auto r = exact_reference<double>(d);
    EXPECT_EQ(r.sum, sum);
    EXPECT_EQ(r.sum_abs, sum_abs);

    const auto f = draw_stream_f32(make_stream_spec(Precision::binary32, 3000, seed));
    ExactValue fsum;
    for (float x : f) fsum += ExactValue::from_float(x);
    EXPECT_EQ(exact_reference<float>(f).sum, fsum);
  }
}

TEST(ExactAccumulator, SubnormalsAndMixedMagnitudes) {
  std::vector<double> xs;
  ExactValue want;
  for (int k = -1074; k <= 1023; k += 7) {
    const double sign = k % 2 ? -1.0 : 1.0;
    const double x = k >= -1022 ? sign * std::ldexp(1.0 + 0x1p-52, k) : sign * std::ldexp(3.0, k);
    xs.push_back(x);
    want += ExactValue::from_double(x);
  }
  EXPECT_EQ(exact_reference<double>(xs).sum, want);
}

}  // namespace
}  // namespace compsum
