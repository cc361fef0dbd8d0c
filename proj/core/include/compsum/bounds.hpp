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

// Worst-case error bounds of the five recursive summation algorithms, as
// functions of n, the unit round-off eps, S = sum |x_k| and |sum x_k|.
// Everything is evaluated exactly in rationals; convert at the very end.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "compsum/exact.hpp"
#include "compsum/summation.hpp"

namespace compsum {

/// Raised when a bound's precondition (n*eps < 1 and friends) fails: the
/// bound is not loose there, it does not exist.
class BoundInapplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct BoundInput {
  std::uint64_t n = 1;
  Rational eps;
  Rational sum_abs;
  /// |sum x_k|, needed only by the s-only bound.
  std::optional<Rational> abs_sum;
};

/// Per-step perturbation bounds of the doubly/triply compensated schemes.
struct SigmaTau {
  Rational sigma;
  Rational tau;
};

/// 2^-24 or 2^-53 style: 1/2 * 2^(1-t).
Rational unit_roundoff_binary(int t);

/// Throws std::invalid_argument for algorithms other than double6op/triple6op.
SigmaTau sigma_tau(Algorithm kind, const Rational& eps);

/// n eps / (1 - n eps) * S. Requires n eps < 1.
Rational bound_plain(const BoundInput& b);

/// 2 eps S: leading order only, not a rigorous bound.
Rational bound_kahan_leading(const BoundInput& b);

/// (2 eps + 4 n eps^2) S. The quadratic coefficient is a conservative
/// choice, not a derived constant; use it for checking, not for claims.
Rational bound_kahan_validation(const BoundInput& b);

/// Error of s + e for the 6op-compensated sum. Requires (n-1) eps^2 < 1.
Rational bound_6op_pair(const BoundInput& b);

/// Error of s alone for the 6op-compensated sum; needs abs_sum.
Rational bound_6op_s_only(const BoundInput& b);

/// Error of s + e for double6op / triple6op. Requires (n-1) sigma < 1.
Rational bound_compensated(Algorithm kind, const BoundInput& b);

/// Leading-order term: n eps (plain), 2 eps (kahan), eps + (n-1) eps^2 (6op),
/// (2n-1) eps^2 (double6op), (n+1) eps^2 (triple6op), times S.
Rational bound_leading(Algorithm kind, const BoundInput& b);

/// The bound on |s + e - sum| that validation checks for each algorithm.
Rational bound_pair(Algorithm kind, const BoundInput& b);

/// Scientific notation with `digits` significant digits, rounded
/// half-to-even from the exact value: "6.67E-02".
std::string format_scientific(const Rational& r, int digits = 3);

}  // namespace compsum
