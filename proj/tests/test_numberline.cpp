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
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "compsum/numberline.hpp"

namespace compsum {
namespace {

const dekker::SystemParams kTiny{2, 3, -3, 0};

TEST(NumberLine, DekkerBinsHoldEveryMantissa) {
  const auto rows = number_line(kTiny, NumberLineView::dekker_bins);
  std::map<std::int64_t, int> per_bin;
  for (const auto& r : rows) ++per_bin[r.bin];
  ASSERT_EQ(per_bin.size(), 4u);
  for (const auto& [bin, count] : per_bin) EXPECT_EQ(count, 8) << bin;
  EXPECT_EQ(rows.size(), 32u);
}

TEST(NumberLine, IeeeBinsHaveUniqueRepresentations) {
  const auto rows = number_line(kTiny, NumberLineView::ieee_bins);
  std::map<std::int64_t, int> per_bin, subnormal;
  for (const auto& r : rows) {
    ++per_bin[r.bin];
    if (!r.normal) ++subnormal[r.bin];
  }
  EXPECT_EQ(per_bin[-3], 8);
  EXPECT_EQ(subnormal[-3], 4);
  for (std::int64_t e = -2; e <= 0; ++e) {
    EXPECT_EQ(per_bin[e], 4);
    EXPECT_EQ(subnormal[e], 0);
  }
  // The unique view lists each nonnegative number exactly once.
  std::vector<ExactValue> values;
  for (const auto& r : rows) values.push_back(r.value);
  std::sort(values.begin(), values.end());
  EXPECT_EQ(std::adjacent_find(values.begin(), values.end()), values.end());
  EXPECT_EQ(values.size(), number_line(kTiny, NumberLineView::all).size());
}

TEST(NumberLine, AllViewIsSortedAndEndsAtTheLargestNumber) {
  const auto rows = number_line(kTiny, NumberLineView::all);
  EXPECT_EQ(rows.size(), 20u);
  EXPECT_TRUE(rows.front().value.is_zero());
  EXPECT_EQ(rows.back().value, ExactValue(BigInt(7), 0));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i - 1].value, rows[i].value);
}

TEST(NumberLine, CsvAndViews) {
  std::ostringstream os;
  write_number_line(os, number_line(kTiny, NumberLineView::ieee_bins), NumberLineView::ieee_bins);
  const std::string out = os.str();
  EXPECT_EQ(out.substr(0, out.find('\n')), "view,bin,mantissa,value,normal");
  EXPECT_NE(out.find("ieee_bins,-3,1,0.125,0"), std::string::npos);
  EXPECT_NE(out.find("ieee_bins,0,7,7,1"), std::string::npos);
  EXPECT_EQ(parse_numberline_view("dekker_bins"), NumberLineView::dekker_bins);
  EXPECT_THROW(parse_numberline_view("bins"), std::invalid_argument);
  EXPECT_THROW(number_line(dekker::SystemParams(2, 30, -100, 100), NumberLineView::all),
               std::length_error);
}

}  // namespace
}  // namespace compsum
