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

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "compsum/dekker.hpp"

namespace compsum::dekker {
namespace {

const SystemParams kTiny{2, 3, -3, 0};
const SystemParams kWide{2, 3, -3, 8};

ExactValue val(long long m, std::int64_t e) { return ExactValue(BigInt(m), e, 2); }

// Independent oracle: every value of every valid representation, by brute
// force, then the nearest one; ties go to the candidate whose value is an
// even multiple of beta^E at the tie's smallest admissible exponent E.
std::vector<ExactValue> brute_values(const SystemParams& p) {
  std::set<ExactValue> s;
  const auto M = static_cast<long long>(p.M());
  for (auto e = p.emin(); e <= p.emax(); ++e) {
    for (long long m = -(M - 1); m < M; ++m) s.insert(ExactValue(BigInt(m), e, p.beta()));
  }
  return {s.begin(), s.end()};
}

ExactValue brute_round(const SystemParams& p, const std::vector<ExactValue>& values,
                       const ExactValue& v) {
  std::vector<ExactValue> best;
  ExactValue best_gap;
  for (const auto& c : values) {
    const ExactValue gap = (c - v).abs();
    if (best.empty() || gap < best_gap) {
      best = {c};
      best_gap = gap;
    } else if (gap == best_gap) {
      best.push_back(c);
    }
  }
  if (best.size() == 1) return best.front();
  // Smallest exponent E >= emin at which |v| has integer part < M.
  std::int64_t E = p.emin();
  while (v.abs() >= ExactValue(p.M(), E, p.beta())) ++E;
  for (const auto& c : best) {
    const Rational k = c.to_rational() / rational_pow(p.beta(), E);
    if (boost::multiprecision::denominator(k) == 1 &&
        !boost::multiprecision::bit_test(boost::multiprecision::numerator(k), 0)) {
      return c;
    }
  }
  return best.front();
}

TEST(SystemParams, Validation) {
  EXPECT_THROW(SystemParams(1, 3, 0, 1), std::invalid_argument);
  EXPECT_THROW(SystemParams(2, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(SystemParams(2, 3, 2, 1), std::invalid_argument);
  EXPECT_EQ(SystemParams(2, 53, -1074, 971).M(), BigInt(1) << 53);
  EXPECT_EQ(kTiny.unit_roundoff(), Rational(1, 8));
}

TEST(Repr, Validity) {
  EXPECT_TRUE(is_valid_repr(kTiny, {7, 0}));
  EXPECT_FALSE(is_valid_repr(kTiny, {8, 0}));
  EXPECT_FALSE(is_valid_repr(kTiny, {1, 1}));
  EXPECT_FALSE(is_valid_repr(kTiny, {1, -4}));
  EXPECT_TRUE(is_valid_repr(kTiny, {-7, -3}));
}

TEST(Repr, Canonicalize) {
  EXPECT_EQ(canonicalize(kTiny, {1, 0}), (Repr{4, -2}));
  EXPECT_EQ(canonicalize(kTiny, {5, -1}), (Repr{5, -1}));
  EXPECT_EQ(canonicalize(kTiny, {2, -3}), (Repr{2, -3}));
  EXPECT_EQ(canonicalize(kTiny, {1, -2}), (Repr{2, -3}));
  EXPECT_EQ(canonicalize(kTiny, {0, 0}), (Repr{0, -3}));
  EXPECT_EQ(canonicalize(kTiny, {-3, 0}), (Repr{-6, -1}));
  EXPECT_THROW(canonicalize(kTiny, {8, 0}), std::invalid_argument);
}

TEST(Repr, RepresentationsShareOneValue) {
  const auto reps = representations(kTiny, {1, 0});
  ASSERT_EQ(reps.size(), 3u);  // 1*2^0, 2*2^-1, 4*2^-2
  for (const auto& r : reps) EXPECT_TRUE(same_value(kTiny, r, {1, 0}));
  EXPECT_EQ(representations(kTiny, {0, 0}).size(), 4u);
  EXPECT_EQ(exponent_span(kTiny, {5, -1}), (std::pair<std::int64_t, std::int64_t>{-1, -1}));
}

TEST(Enumerate, TinySystemCounts) {
  const auto all = enumerate_numbers(kTiny);
  const auto brute = brute_values(kTiny);
  ASSERT_EQ(all.size(), brute.size());
  const auto nonnegative = std::count_if(all.begin(), all.end(), [](const Repr& r) { return r.m >= 0; });
  // 8 at emin (zero and seven more) plus 4 normals in each of the 3 higher bins.
  EXPECT_EQ(nonnegative, 20);
  EXPECT_EQ(all.size(), 39u);
  EXPECT_EQ(number_count(kTiny), 39);
  EXPECT_EQ(std::count_if(all.begin(), all.end(), [](const Repr& r) { return r.m == 0; }), 1);
  EXPECT_EQ(to_exact(kTiny, all.back()), val(7, 0));
  EXPECT_EQ(to_exact(kTiny, all.front()), val(-7, 0));
}

TEST(Enumerate, MatchesBruteForceAndIsSortedCanonical) {
  for (int t = 1; t <= 4; ++t) {
    for (int emin = -4; emin <= 0; ++emin) {
      for (int emax = 0; emax <= 4; ++emax) {
        const SystemParams p(2, t, emin, emax);
        const auto all = enumerate_numbers(p);
        const auto brute = brute_values(p);
        ASSERT_EQ(all.size(), brute.size()) << p.to_string();
        for (std::size_t i = 0; i < all.size(); ++i) {
          EXPECT_EQ(to_exact(p, all[i]), brute[i]) << p.to_string();
          EXPECT_EQ(canonicalize(p, all[i]), all[i]);
        }
      }
    }
  }
  const SystemParams ternary(3, 2, -1, 1);
  EXPECT_EQ(enumerate_numbers(ternary).size(), brute_values(ternary).size());
}

TEST(Enumerate, SizeGuard) {
  EXPECT_THROW(enumerate_numbers(SystemParams::binary32()), std::length_error);
  EXPECT_THROW(enumerate_numbers(kTiny, 10), std::length_error);
}

TEST(RoundExact, Examples) {
  EXPECT_EQ(round_exact(kWide, val(9, -3)), (Repr{4, -2}));  // tie 1.125 -> 1.0
  EXPECT_EQ(round_exact(kWide, val(5, -1)), (Repr{5, -1}));
  EXPECT_EQ(round_exact(kTiny, val(8, 0)), (Repr{7, 0}));    // clips
  EXPECT_EQ(round_exact(kTiny, val(-100, 0)), (Repr{-7, 0}));
  EXPECT_EQ(round_exact(kWide, val(15, 0)), (Repr{4, 2}));   // 7.5 at e=1 carries
  EXPECT_EQ(round_exact(kWide, val(11, -3)), (Repr{6, -2}));  // tie 1.375 -> 1.5 (even)
  EXPECT_EQ(round_exact(kWide, ExactValue()), (Repr{0, -3}));
}

TEST(RoundExact, HalfUpMutationRoundsTiesTowardPlusInfinity) {
  EXPECT_EQ(round_exact(kWide, val(9, -3), TieBreak::half_up), (Repr{5, -2}));
  EXPECT_EQ(round_exact(kWide, val(-9, -3), TieBreak::half_up), (Repr{-4, -2}));
}

TEST(RoundExact, MatchesBruteForceNearest) {
  for (int t = 1; t <= 4; ++t) {
    for (int emin = -3; emin <= 0; ++emin) {
      for (int emax = 0; emax <= 3; ++emax) {
        const SystemParams p(2, t, emin, emax);
        const auto values = brute_values(p);
        // Every multiple of beta^(emin-2) over a range a bit wider than the system.
        const BigInt limit = (p.M() + 2) * ipow(2, emax - emin + 2);
        const BigInt step = std::max<BigInt>(BigInt(1), limit / 400);
        for (BigInt k = -limit; k <= limit; k += step) {
          const ExactValue v(k, emin - 2, 2);
          const Repr got = round_exact(p, v);
          EXPECT_EQ(to_exact(p, got), brute_round(p, values, v))
              << p.to_string() << " v=" << v.to_string();
          EXPECT_EQ(canonicalize(p, got), got);
        }
      }
    }
  }
}

TEST(FlAdd, Examples) {
  EXPECT_EQ(fl_add(kWide, {4, 2}, {-1, 0}), (Repr{4, 2}));  // 15 -> 16
  EXPECT_EQ(fl_add(kWide, {5, -1}, {0, 0}), canonicalize(kWide, {5, -1}));
  EXPECT_EQ(fl_add(kWide, {1, 0}, {0, -3}), (Repr{4, -2}));
  EXPECT_EQ(fl_sub(kWide, {4, 2}, {4, 2}), (Repr{0, -3}));
  EXPECT_THROW(fl_add(kWide, {8, 0}, {1, 0}), std::invalid_argument);
}

TEST(ExactSum, Examples) {
  EXPECT_EQ(exact_sum(kWide, {4, 2}, {-4, -2}), val(15, 0));
  EXPECT_TRUE(exact_sum(kWide, {3, 1}, {-3, 1}).is_zero());
  EXPECT_EQ(exact_sum(kWide, {1, 0}, {1, 0}), val(1, 1));
}

TEST(FlAdd, ExhaustiveProperties) {
  for (int t = 1; t <= 4; ++t) {
    for (int emin = -4; emin <= 0; ++emin) {
      for (int emax = 0; emax <= 4; emax += 2) {
        const SystemParams p(2, t, emin, emax);
        const auto xs = enumerate_numbers(p);
        for (const auto& x : xs) {
          EXPECT_EQ(round_exact(p, to_exact(p, x)), x);  // idempotent
          EXPECT_EQ(fl_add(p, x, {0, emax}), x);
          for (const auto& y : xs) {
            const Repr z = fl_add(p, x, y);
            EXPECT_EQ(z, fl_add(p, y, x));
            EXPECT_EQ(negate(z), fl_add(p, negate(x), negate(y)));
          }
        }
      }
    }
  }
}

TEST(Host, ConversionsRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double d = std::bit_cast<double>(rng());
    if (!std::isfinite(d)) continue;
    const Repr r = from_host(d);
    ASSERT_TRUE(is_valid_repr(SystemParams::binary64(), r));
    EXPECT_EQ(to_double(r), d == 0 ? 0.0 : d);
    const float f = std::bit_cast<float>(static_cast<std::uint32_t>(rng()));
    if (!std::isfinite(f)) continue;
    const Repr rf = from_host(f);
    ASSERT_TRUE(is_valid_repr(SystemParams::binary32(), rf));
    EXPECT_EQ(to_float(rf), f == 0 ? 0.0f : f);
  }
  EXPECT_EQ(from_host(std::numeric_limits<float>::denorm_min()), (Repr{1, -149}));
  EXPECT_EQ(from_host(std::numeric_limits<double>::max()),
            (Repr{(BigInt(1) << 53) - 1, 971}));
  EXPECT_THROW(from_host(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

// Bitwise agreement with the host FPU on random non-overflowing pairs: a mix
// of raw bit patterns, close exponents (cancellation and ties) and
// subnormals. The full 10^6-pair run lives in the acceptance binary.
template <class T, class Bits>
void differential(const SystemParams& p, int pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int checked = 0;
  while (checked < pairs) {
    Bits bx = static_cast<Bits>(rng()), by = static_cast<Bits>(rng());
    const int mode = checked % 3;
    constexpr int kFraction = std::numeric_limits<T>::digits - 1;
    constexpr Bits kExpMask = static_cast<Bits>(~Bits{0} >> 1) & ~((Bits{1} << kFraction) - 1);
    if (mode == 1) {
      // y's exponent within a few steps of x's.
      const Bits shift = static_cast<Bits>(static_cast<Bits>(rng() % 5) << kFraction);
      by = (by & ~kExpMask) | ((bx & kExpMask) - std::min(shift, bx & kExpMask));
    } else if (mode == 2) {
      bx &= ~kExpMask;
      by &= ~kExpMask;
    }
    const T x = std::bit_cast<T>(bx), y = std::bit_cast<T>(by);
    const T z = x + y;
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) continue;
    const Repr got = fl_add(p, from_host(x), from_host(y));
    ASSERT_FALSE(overflows(p, exact_sum(p, from_host(x), from_host(y))));
    const T sim = static_cast<T>(to_double(got));
    // Zero signs are outside the simulated system; compare values otherwise bitwise.
    if (z == 0) {
      EXPECT_EQ(sim, T(0));
    } else {
      EXPECT_EQ(std::bit_cast<Bits>(sim), std::bit_cast<Bits>(z))
          << x << " + " << y << ": host " << z << " simulated " << sim;
    }
    ++checked;
  }
}

TEST(Differential, Binary32AgreesWithHost) {
  differential<float, std::uint32_t>(SystemParams::binary32(), 100000, 1);
}

TEST(Differential, Binary64AgreesWithHost) {
  differential<double, std::uint64_t>(SystemParams::binary64(), 100000, 2);
}

}  // namespace
}  // namespace compsum::dekker
