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

#include "compsum/reference.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace compsum {

void ExactAccumulator::add(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("ExactAccumulator: non-finite addend");
  const auto bits = std::bit_cast<std::uint64_t>(x);
  const auto biased = static_cast<int>((bits >> 52) & 0x7FF);
  std::uint64_t mantissa = bits & ((std::uint64_t{1} << 52) - 1);
  int exponent = -1074;
  if (biased != 0) {
    mantissa |= std::uint64_t{1} << 52;
    exponent = biased - 1075;
  }
  if (mantissa == 0) return;
  add_shifted(mantissa, exponent + kBias, (bits >> 63) != 0);
}

void ExactAccumulator::add_shifted(std::uint64_t mantissa, int offset, bool negative) {
  const int limb = offset / 64;
  const int shift = offset % 64;
  const std::uint64_t lo = mantissa << shift;
  const std::uint64_t hi = shift == 0 ? 0 : mantissa >> (64 - shift);

  if (!negative) {
    std::uint64_t carry = 0;
    for (int i = limb; i < kLimbs; ++i) {
      const std::uint64_t part = i == limb ? lo : (i == limb + 1 ? hi : 0);
      if (part == 0 && carry == 0 && i > limb + 1) break;
      const std::uint64_t a = limbs_[i];
      std::uint64_t r = a + part;
      std::uint64_t c = r < a ? 1 : 0;
      const std::uint64_t r2 = r + carry;
      c += r2 < r ? 1 : 0;
      limbs_[i] = r2;
      carry = c;
    }
  } else {
    std::uint64_t borrow = 0;
    for (int i = limb; i < kLimbs; ++i) {
      const std::uint64_t part = i == limb ? lo : (i == limb + 1 ? hi : 0);
      if (part == 0 && borrow == 0 && i > limb + 1) break;
      const std::uint64_t a = limbs_[i];
      std::uint64_t r = a - part;
      std::uint64_t b = a < part ? 1 : 0;
      const std::uint64_t r2 = r - borrow;
      b += r < borrow ? 1 : 0;
      limbs_[i] = r2;
      borrow = b;
    }
  }
}

bool ExactAccumulator::is_zero() const {
  for (auto limb : limbs_) {
    if (limb != 0) return false;
  }
  return true;
}

int ExactAccumulator::sign() const {
  if (limbs_[kLimbs - 1] >> 63) return -1;
  return is_zero() ? 0 : 1;
}

ExactValue ExactAccumulator::value() const {
  BigInt n = 0;
  for (int i = kLimbs - 1; i >= 0; --i) {
    n <<= 64;
    n += limbs_[i];
  }
  if (limbs_[kLimbs - 1] >> 63) n -= BigInt(1) << (64 * kLimbs);
  return ExactValue(std::move(n), -kBias, 2);
}

}  // namespace compsum
