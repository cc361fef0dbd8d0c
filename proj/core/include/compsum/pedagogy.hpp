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

// Hand-sized traces of the compensated algorithms on the simulated Dekker
// system with beta = 2, where the effect of each compensation step on two
// short, adversarial sequences can be read directly off the table.

#include <string>
#include <vector>

#include "compsum/arithmetic.hpp"
#include "compsum/summation.hpp"

namespace compsum {

struct TraceTable {
  std::string title;
  Algorithm algorithm;
  std::vector<std::string> columns;            // e.g. {"y", "s", "e"}
  std::vector<std::vector<std::string>> rows;  // one cell per column, per step
  dekker::Repr final_s;
  dekker::Repr final_e;
};

/// The system the traces run on: beta = 2, t digits, exponents wide enough
/// that none of the values involved clip.
dekker::SystemParams pedagogy_system(int t);

/// Writes v in terms of t: 0, 2^0, -2^1, 2^(t+1), (2^t-1)x2^1, ...
/// Powers 2^0 and 2^1 stay literal; larger powers are written relative to t.
std::string symbolic(const dekker::Repr& v, int t);

/// Runs `algorithm` over `xs` and records its per-step temporaries.
TraceTable trace(Algorithm algorithm, const std::vector<dekker::Repr>& xs, int t,
                 std::string title);

/// [2^(t+1), -2^0, -2^0] and [2^0, 2^(t+1), -2^(t+1), -2^0].
std::vector<dekker::Repr> pedagogy_sequence_a(int t);
std::vector<dekker::Repr> pedagogy_sequence_b(int t);

/// Plain and Kahan on sequence a, 6op on a and b, double6op and triple6op on b.
std::vector<TraceTable> pedagogy_traces(int t = 3);

/// "i=1:  y=2^(t+1)  s=2^(t+1)  e=0" per row, with a title line per table.
std::string render(const TraceTable& table);
std::string render_all(const std::vector<TraceTable>& tables, int t);

}  // namespace compsum
