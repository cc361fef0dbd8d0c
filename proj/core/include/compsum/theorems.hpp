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

// Exhaustive verification of the rounding and error-free-transformation
// properties on small simulated systems. For a system with a few dozen
// numbers every pair (and every representation of every operand) can be
// tried, so a passing check is a proof for that system.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "compsum/dekker.hpp"

namespace compsum {

struct CheckResult {
  std::string name;
  std::string system;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// First failure, with full representations; empty when passing.
  std::string counterexample;

  bool passed() const { return failures == 0; }
};

struct TheoremReport {
  std::vector<CheckResult> results;

  bool all_passed() const;
  std::uint64_t failures() const;
  void append(const TheoremReport& other);
};

/// Names of every check, in run order.
const std::vector<std::string>& theorem_check_names();

/// All checks on one system. `tie` is the rounding mode of the arithmetic
/// under test; half_up exists to confirm that the checks can fail.
TheoremReport check_system(const dekker::SystemParams& p,
                           dekker::TieBreak tie = dekker::TieBreak::to_even);

struct TheoremGrid {
  int beta = 2;
  int t_min = 1, t_max = 3;
  std::int64_t emin_min = -3, emin_max = 0;
  std::int64_t emax_min = 0, emax_max = 3;
};

/// Every (t, emin, emax) of the grid with emin <= emax.
std::vector<dekker::SystemParams> grid_systems(const TheoremGrid& grid);

TheoremReport check_grid(const TheoremGrid& grid,
                         dekker::TieBreak tie = dekker::TieBreak::to_even);

/// One line per check aggregated over systems ("PASS name systems=.. cases=..");
/// failing checks add their first counterexample. With `per_system`, one line
/// per (check, system) instead.
void print_report(std::ostream& os, const TheoremReport& report, bool per_system = false);

}  // namespace compsum
