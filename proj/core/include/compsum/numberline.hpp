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

// Data behind number-line pictures of a small system: where the numbers sit,
// and how the representations group into exponent bins.

#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

#include "compsum/dekker.hpp"

namespace compsum {

enum class NumberLineView {
  all,          // each distinct nonnegative number once, canonical
  dekker_bins,  // every representation m*beta^E, 0 <= m < M, per exponent E
  ieee_bins,    // the unique (normal, or subnormal at emin) representations per bin
};

std::string_view to_string(NumberLineView v);
NumberLineView parse_numberline_view(std::string_view name);

struct NumberLineRow {
  std::int64_t bin;  // exponent of the representation
  BigInt mantissa;
  ExactValue value;
  bool normal;  // beta^(t-1) <= m
};

/// Nonnegative rows, in bin order then by mantissa. Throws std::length_error
/// when the system is too large to enumerate.
std::vector<NumberLineRow> number_line(const dekker::SystemParams& p, NumberLineView view);

/// view,bin,mantissa,value,normal
void write_number_line(std::ostream& os, const std::vector<NumberLineRow>& rows,
                       NumberLineView view, char separator = ',');

}  // namespace compsum
