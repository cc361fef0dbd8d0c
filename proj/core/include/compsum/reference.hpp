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

#pragma once

// Exact sums of host floats. Every finite double is an integer multiple of
// 2^-1074 below 2^1024, so a wide enough two's-complement fixed-point
// register holds any sum of up to 2^63 of them without rounding.

#include <array>
#include <cstdint>
#include <span>

#include "compsum/exact.hpp"

namespace compsum {

class ExactAccumulator {
 public:
  /// Throws std::invalid_argument for Inf or NaN.
  void add(double x);
  void add(float x) { add(static_cast<double>(x)); }

  template <class T>
  void add(std::span<const T> xs) {
    for (T x : xs) add(x);
  }

  ExactValue value() const;
  bool is_zero() const;
  int sign() const;

 private:
  // Bit 0 of limb 0 weighs 2^-1074. 1074 + 1024 + 64 bits of headroom.
  static constexpr int kLimbs = 34;
  static constexpr int kBias = 1074;

  void add_shifted(std::uint64_t mantissa, int offset, bool negative);

  std::array<std::uint64_t, kLimbs> limbs_{};
};

struct ReferenceSums {
  ExactValue sum;      // sum x_k
  ExactValue sum_abs;  // sum |x_k|
};

template <class T>
ReferenceSums exact_reference(std::span<const T> xs) {
  ExactAccumulator sum, sum_abs;
  for (T x : xs) {
    sum.add(x);
    sum_abs.add(x < 0 ? -x : x);
  }
  return {sum.value(), sum_abs.value()};
}

}  // namespace compsum
