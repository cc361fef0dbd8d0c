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

#include "compsum/numberline.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace compsum {

std::string_view to_string(NumberLineView v) {
  switch (v) {
    case NumberLineView::all: return "all";
    case NumberLineView::dekker_bins: return "dekker_bins";
    case NumberLineView::ieee_bins: return "ieee_bins";
  }
  return "?";
}

NumberLineView parse_numberline_view(std::string_view name) {
  for (auto v : {NumberLineView::all, NumberLineView::dekker_bins, NumberLineView::ieee_bins}) {
    if (to_string(v) == name) return v;
  }
  throw std::invalid_argument("unknown number-line view '" + std::string(name) +
                              "' (expected all, dekker_bins or ieee_bins)");
}

std::vector<NumberLineRow> number_line(const dekker::SystemParams& p, NumberLineView view) {
  const BigInt bins = BigInt(p.emax() - p.emin() + 1);
  const BigInt reps = view == NumberLineView::dekker_bins ? bins * p.M() : dekker::number_count(p);
  if (reps > dekker::kEnumerationLimit) {
    throw std::length_error("number_line: system " + p.to_string() + " is too large");
  }
  const auto M = static_cast<std::int64_t>(p.M());
  const auto lower = static_cast<std::int64_t>(ipow(p.beta(), p.t() - 1));
  std::vector<NumberLineRow> rows;
  auto push = [&](std::int64_t m, std::int64_t e) {
    rows.push_back({e, BigInt(m), ExactValue(BigInt(m), e, p.beta()), m >= lower});
  };

  switch (view) {
    case NumberLineView::dekker_bins:
      for (std::int64_t e = p.emin(); e <= p.emax(); ++e) {
        for (std::int64_t m = 0; m < M; ++m) push(m, e);
      }
      break;
    case NumberLineView::ieee_bins:
      for (std::int64_t m = 0; m < M; ++m) push(m, p.emin());
      for (std::int64_t e = p.emin() + 1; e <= p.emax(); ++e) {
        for (std::int64_t m = lower; m < M; ++m) push(m, e);
      }
      break;
    case NumberLineView::all:
      for (const auto& r : dekker::enumerate_numbers(p)) {
        if (r.m < 0) continue;
        rows.push_back({r.e, r.m, dekker::to_exact(p, r), r.m >= lower});
      }
      break;
  }
  return rows;
}

void write_number_line(std::ostream& os, const std::vector<NumberLineRow>& rows,
                       NumberLineView view, char sep) {
  os << "view" << sep << "bin" << sep << "mantissa" << sep << "value" << sep << "normal\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g", r.value.to_double());
    os << to_string(view) << sep << r.bin << sep << r.mantissa.str() << sep << buf << sep
       << (r.normal ? 1 : 0) << '\n';
  }
}

}  // namespace compsum
