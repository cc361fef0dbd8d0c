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

// A simulated floating-point system in Dekker's style: numbers m * beta^e
// with |m| < beta^t and emin <= e <= emax, where a number may have several
// representations. Rounding is nearest with ties to even, overflow clips to
// the largest-magnitude element. Everything is exact integer arithmetic, so
// small systems can be enumerated and checked exhaustively.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "compsum/exact.hpp"

namespace compsum::dekker {

class SystemParams {
 public:
  /// Throws std::invalid_argument unless beta >= 2, t >= 1, emin <= emax.
  SystemParams(int beta, int t, std::int64_t emin, std::int64_t emax);

  /// IEEE binary32 / binary64 number sets (without Inf/NaN).
  static SystemParams binary32() { return {2, 24, -149, 104}; }
  static SystemParams binary64() { return {2, 53, -1074, 971}; }

  int beta() const { return beta_; }
  int t() const { return t_; }
  std::int64_t emin() const { return emin_; }
  std::int64_t emax() const { return emax_; }
  /// beta^t, exact.
  const BigInt& M() const { return M_; }
  /// 1/2 * beta^(1-t).
  Rational unit_roundoff() const;

  std::string to_string() const;

  friend bool operator==(const SystemParams& a, const SystemParams& b) {
    return a.beta_ == b.beta_ && a.t_ == b.t_ && a.emin_ == b.emin_ && a.emax_ == b.emax_;
  }

 private:
  int beta_;
  int t_;
  std::int64_t emin_;
  std::int64_t emax_;
  BigInt M_;
};

/// One representation m * beta^e. Equality is structural; all operations below
/// return canonical representations, for which structural equality is value
/// equality. Use `same_value` to compare arbitrary representations.
struct Repr {
  BigInt m = 0;
  std::int64_t e = 0;

  friend bool operator==(const Repr& a, const Repr& b) = default;
};

/// Tie handling for exact midpoints. `half_up` (toward +inf) breaks the
/// negation symmetry and exists only for mutation testing of the checkers.
enum class TieBreak { to_even, half_up };

bool is_valid_repr(const SystemParams& p, const Repr& r);

/// Throws std::invalid_argument if r is not valid in p.
void require_valid(const SystemParams& p, const Repr& r);

/// The normal representation when one exists, otherwise the one at emin.
Repr canonicalize(const SystemParams& p, const Repr& r);

ExactValue to_exact(const SystemParams& p, const Repr& r);

bool same_value(const SystemParams& p, const Repr& a, const Repr& b);

/// Smallest and largest exponent at which r's number has a valid
/// representation. Zero spans [emin, emax].
std::pair<std::int64_t, std::int64_t> exponent_span(const SystemParams& p, const Repr& r);

/// Every valid representation of r's number, by increasing exponent.
std::vector<Repr> representations(const SystemParams& p, const Repr& r);

/// Number of distinct numbers in the system (both signs, zero once).
BigInt number_count(const SystemParams& p);

inline constexpr std::size_t kEnumerationLimit = 1'000'000;

/// All distinct numbers, canonical, ascending. Throws std::length_error when
/// the system holds more than `limit` numbers.
std::vector<Repr> enumerate_numbers(const SystemParams& p,
                                    std::size_t limit = kEnumerationLimit);

/// Nearest element of the system to v. Values beyond (M-1)*beta^emax clip.
Repr round_exact(const SystemParams& p, const ExactValue& v,
                 TieBreak tie = TieBreak::to_even);

/// Exact x + y.
ExactValue exact_sum(const SystemParams& p, const Repr& x, const Repr& y);

Repr negate(const Repr& x);

/// fl(x + y) and fl(x - y). Operands must be valid in p.
Repr fl_add(const SystemParams& p, const Repr& x, const Repr& y,
            TieBreak tie = TieBreak::to_even);
Repr fl_sub(const SystemParams& p, const Repr& x, const Repr& y,
            TieBreak tie = TieBreak::to_even);

/// Largest finite magnitude, (M-1) * beta^emax.
ExactValue max_magnitude(const SystemParams& p);

bool overflows(const SystemParams& p, const ExactValue& v);

/// Host float <-> representation in binary32()/binary64(). Conversions to the
/// host type are exact for any valid representation of those systems.
Repr from_host(float x);
Repr from_host(double x);
float to_float(const Repr& r);
double to_double(const Repr& r);

std::string to_string(const Repr& r, int beta = 2);

}  // namespace compsum::dekker
