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

#include <cstdint>
#include <string_view>
#include <vector>

namespace compsum {

enum class Precision { binary32, binary64 };

/// "f32" / "f64".
std::string_view to_string(Precision p);
/// Accepts f32, f64, binary32, binary64; throws std::invalid_argument otherwise.
Precision parse_precision(std::string_view name);

/// Significand bits including the hidden one: 24 or 53.
int mantissa_digits(Precision p);

/// Random addends: uniformly distributed bit patterns, rejecting any whose
/// biased exponent field is >= exponent_cutoff. The cutoff keeps the sum of
/// n <= 2^20 terms far from overflow and also removes Inf and NaN.
struct RandomStreamSpec {
  Precision precision = Precision::binary64;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint32_t exponent_cutoff = 0;
};

/// 247 (0b11110111) for binary32; 2000 (0b11111010000, the 11-bit field
/// whose top eight bits are 11111010) for binary64.
std::uint32_t default_exponent_cutoff(Precision p);

RandomStreamSpec make_stream_spec(Precision p, std::uint64_t n, std::uint64_t seed);

/// Throws std::invalid_argument if the spec's precision does not match the
/// requested type or the cutoff is 0 or exceeds the exponent field.
std::vector<float> draw_stream_f32(const RandomStreamSpec& spec);
std::vector<double> draw_stream_f64(const RandomStreamSpec& spec);

/// Biased exponent field of a host value.
std::uint32_t biased_exponent(float x);
std::uint32_t biased_exponent(double x);

}  // namespace compsum
