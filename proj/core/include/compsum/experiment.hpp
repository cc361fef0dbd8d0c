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

// Random accumulation experiments: draw a stream, sum it with each algorithm,
// compare against the exact sum and against the algorithm's error bound.

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "compsum/bounds.hpp"
#include "compsum/stream.hpp"
#include "compsum/summation.hpp"

namespace compsum {

struct ExperimentRecord {
  Algorithm algorithm = Algorithm::plain;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  Precision precision = Precision::binary64;
  double obs_pair = 0;  // |s + e - sum| / sum|x|
  double obs_s = 0;     // |s - sum| / |sum|
  double bound = 0;     // relative bound on obs_pair; NaN if inapplicable
  bool applicable = true;
  /// Decided exactly: |s + e - sum| > bound * sum|x|.
  bool violated = false;
};

/// Flip one bit of the running sum s after the `after_step`-th addend:
/// a stand-in for a silent hardware fault.
struct FaultInjection {
  std::uint64_t after_step = 0;
  int bit = 0;
};

/// Mantissa MSB of the precision: bit 22 (binary32) or 51 (binary64).
int default_fault_bit(Precision p);

/// Throws BoundInapplicable if the algorithm's bound does not exist for
/// (precision, n).
void require_bound_applicable(Algorithm a, Precision p, std::uint64_t n);

/// Relative bound (sum|x| = 1) for (algorithm, precision, n), exact.
Rational relative_bound(Algorithm a, Precision p, std::uint64_t n);

/// Scores one finished accumulation against the exact reference. Non-finite
/// results count as violations.
template <class T>
ExperimentRecord score(Algorithm a, Precision p, std::uint64_t seed, std::span<const T> xs,
                       T s, T e, const ExactValue& sum, const ExactValue& sum_abs);

/// Sums one seeded stream with every listed algorithm.
std::vector<ExperimentRecord> run_accumulation(const RandomStreamSpec& spec,
                                               std::span<const Algorithm> algorithms,
                                               std::optional<FaultInjection> fault = {});

/// Header plus rows: algo,n,seed,precision,obs_pair,obs_s,bound,violated.
void write_records(std::ostream& os, std::span<const ExperimentRecord> records,
                   char separator = ',');
std::string format_record(const ExperimentRecord& r, char separator = ',');

}  // namespace compsum
