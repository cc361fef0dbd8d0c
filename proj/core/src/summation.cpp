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

#include "compsum/summation.hpp"

#include <stdexcept>

namespace compsum {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::plain: return "plain";
    case Algorithm::kahan3op: return "kahan";
    case Algorithm::comp6op: return "6op";
    case Algorithm::double6op: return "double6op";
    case Algorithm::triple6op: return "triple6op";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (to_string(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "' (expected plain, kahan, 6op, double6op or triple6op)");
}

}  // namespace compsum
