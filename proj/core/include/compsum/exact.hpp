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

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace compsum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// beta^k for k >= 0, exact.
BigInt ipow(int beta, std::int64_t k);

/// Number of base-`beta` digits of |a|; 0 for a == 0.
std::int64_t digit_count(const BigInt& a, int beta);

/// An exact real of the form n * beta^q.
///
/// Values are kept canonical: a zero has q == 0, otherwise beta does not
/// divide n. Canonical form makes field-wise equality coincide with value
/// equality. Arithmetic between values of different bases is rejected.
class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(BigInt n, std::int64_t q, int beta = 2);

  static ExactValue from_double(double x);
  static ExactValue from_float(float x) { return from_double(static_cast<double>(x)); }

  const BigInt& n() const { return n_; }
  std::int64_t q() const { return q_; }
  int beta() const { return beta_; }

  bool is_zero() const { return n_.is_zero(); }
  int sign() const { return n_.sign(); }

  ExactValue operator-() const;
  ExactValue abs() const;
  /// value * k for an integer k.
  ExactValue scaled(const BigInt& k) const;
  /// value * beta^d.
  ExactValue shifted(std::int64_t d) const;

  friend ExactValue operator+(const ExactValue& a, const ExactValue& b);
  friend ExactValue operator-(const ExactValue& a, const ExactValue& b);
  ExactValue& operator+=(const ExactValue& b) { return *this = *this + b; }
  ExactValue& operator-=(const ExactValue& b) { return *this = *this - b; }

  friend bool operator==(const ExactValue& a, const ExactValue& b) = default;
  friend std::strong_ordering operator<=>(const ExactValue& a,
                                          const ExactValue& b);

  Rational to_rational() const;
  /// Nearest double (up to one ulp for values with more than 64 significant bits).
  double to_double() const;
  /// "n*beta^q", exact.
  std::string to_string() const;

 private:
  void canonicalize();

  BigInt n_ = 0;
  std::int64_t q_ = 0;
  int beta_ = 2;
};

/// a / b as a double without overflow in the intermediate; b must be nonzero.
double ratio(const ExactValue& a, const ExactValue& b);

/// beta^k as a rational, any sign of k.
Rational rational_pow(int beta, std::int64_t k);

double to_double(const Rational& r);

}  // namespace compsum
