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

#include "compsum/stream.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "compsum/rng.hpp"

namespace compsum {

std::string_view to_string(Precision p) {
  return p == Precision::binary32 ? "f32" : "f64";
}

Precision parse_precision(std::string_view name) {
  if (name == "f32" || name == "binary32") return Precision::binary32;
  if (name == "f64" || name == "binary64") return Precision::binary64;
  throw std::invalid_argument("unknown precision '" + std::string(name) +
                              "' (expected f32 or f64)");
}

int mantissa_digits(Precision p) { return p == Precision::binary32 ? 24 : 53; }

std::uint32_t default_exponent_cutoff(Precision p) {
  return p == Precision::binary32 ? 0b11110111u : 0b11111010000u;
}

RandomStreamSpec make_stream_spec(Precision p, std::uint64_t n, std::uint64_t seed) {
  return {p, n, seed, default_exponent_cutoff(p)};
}

std::uint32_t biased_exponent(float x) {
  return (std::bit_cast<std::uint32_t>(x) >> 23) & 0xFFu;
}

std::uint32_t biased_exponent(double x) {
  return static_cast<std::uint32_t>((std::bit_cast<std::uint64_t>(x) >> 52) & 0x7FFu);
}

std::vector<float> draw_stream_f32(const RandomStreamSpec& spec) {
  if (spec.precision != Precision::binary32) {
    throw std::invalid_argument("draw_stream_f32: spec is not binary32");
  }
  if (spec.exponent_cutoff == 0 || spec.exponent_cutoff > 0xFFu) {
    throw std::invalid_argument("draw_stream_f32: cutoff must be in [1, 255]");
  }
  std::vector<float> out;
  out.reserve(spec.n);
  SplitMix64 rng(spec.seed);
  while (out.size() < spec.n) {
    // One 64-bit draw yields two candidate patterns.
    const std::uint64_t bits = rng();
    for (int half = 0; half < 2 && out.size() < spec.n; ++half) {
      const auto pattern = static_cast<std::uint32_t>(bits >> (32 * half));
      const float x = std::bit_cast<float>(pattern);
      if (biased_exponent(x) < spec.exponent_cutoff) out.push_back(x);
    }
  }
  return out;
}

std::vector<double> draw_stream_f64(const RandomStreamSpec& spec) {
  if (spec.precision != Precision::binary64) {
    throw std::invalid_argument("draw_stream_f64: spec is not binary64");
  }
  if (spec.exponent_cutoff == 0 || spec.exponent_cutoff > 0x7FFu) {
    throw std::invalid_argument("draw_stream_f64: cutoff must be in [1, 2047]");
  }
  std::vector<double> out;
  out.reserve(spec.n);
  SplitMix64 rng(spec.seed);
  while (out.size() < spec.n) {
    const double x = std::bit_cast<double>(rng());
    if (biased_exponent(x) < spec.exponent_cutoff) out.push_back(x);
  }
  return out;
}

}  // namespace compsum
