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

#include "compsum/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace compsum {

namespace {

void require_same_base(const ExactValue& a, const ExactValue& b) {
  if (a.beta() != b.beta() && !a.is_zero() && !b.is_zero()) {
    throw std::invalid_argument("ExactValue: mixed bases");
  }
}

int common_base(const ExactValue& a, const ExactValue& b) {
  return a.is_zero() ? b.beta() : a.beta();
}

BigInt times_beta_pow(const BigInt& n, int beta, std::int64_t k) {
  if (k == 0) return n;
  if (beta == 2) return n << static_cast<unsigned>(k);
  return n * ipow(beta, k);
}

// Top 64 bits of |n| with a sticky low bit, and the binary exponent of bit 0
// of the returned integer relative to n.
std::pair<std::uint64_t, std::int64_t> top_bits(const BigInt& n) {
  BigInt a = boost::multiprecision::abs(n);
  const auto length = static_cast<std::int64_t>(boost::multiprecision::msb(a)) + 1;
  if (length <= 64) return {static_cast<std::uint64_t>(a), 0};
  const auto drop = static_cast<unsigned>(length - 64);
  BigInt top = a >> drop;
  auto bits = static_cast<std::uint64_t>(top);
  if (boost::multiprecision::lsb(a) < drop) bits |= 1u;
  return {bits, static_cast<std::int64_t>(drop)};
}

}  // namespace

BigInt ipow(int beta, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("ipow: negative exponent");
  if (beta == 2) return BigInt(1) << static_cast<unsigned>(k);
  return boost::multiprecision::pow(BigInt(beta), static_cast<unsigned>(k));
}

std::int64_t digit_count(const BigInt& a, int beta) {
  if (a.is_zero()) return 0;
  BigInt m = boost::multiprecision::abs(a);
  const auto bits = static_cast<std::int64_t>(boost::multiprecision::msb(m)) + 1;
  if (beta == 2) return bits;
  // Estimate from the bit length, then correct by at most a step each way.
  auto d = static_cast<std::int64_t>(static_cast<double>(bits - 1) *
                                     std::log(2.0) / std::log(beta));
  if (d < 1) d = 1;
  while (d > 1 && m < ipow(beta, d - 1)) --d;
  while (m >= ipow(beta, d)) ++d;
  return d;
}

ExactValue::ExactValue(BigInt n, std::int64_t q, int beta)
    : n_(std::move(n)), q_(q), beta_(beta) {
  if (beta < 2) throw std::invalid_argument("ExactValue: base must be >= 2");
  canonicalize();
}

void ExactValue::canonicalize() {
  if (n_.is_zero()) {
    q_ = 0;
    return;
  }
  if (beta_ == 2) {
    const auto tz = boost::multiprecision::lsb(boost::multiprecision::abs(n_));
    if (tz > 0) {
      n_ >>= tz;  // exact: the low tz bits are zero, sign is preserved
      q_ += static_cast<std::int64_t>(tz);
    }
    return;
  }
  BigInt quotient, remainder;
  const BigInt base(beta_);
  for (;;) {
    boost::multiprecision::divide_qr(n_, base, quotient, remainder);
    if (!remainder.is_zero()) break;
    n_ = quotient;
    ++q_;
  }
}

ExactValue ExactValue::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("ExactValue: non-finite input");
  if (x == 0.0) return {};
  int exponent = 0;
  const double fraction = std::frexp(x, &exponent);
  const auto mantissa = static_cast<std::int64_t>(std::ldexp(fraction, 53));
  return ExactValue(BigInt(mantissa), exponent - 53, 2);
}

ExactValue ExactValue::operator-() const {
  ExactValue r = *this;
  r.n_ = -r.n_;
  return r;
}

ExactValue ExactValue::abs() const {
  return sign() < 0 ? -*this : *this;
}

ExactValue ExactValue::scaled(const BigInt& k) const {
  return ExactValue(n_ * k, q_, beta_);
}

ExactValue ExactValue::shifted(std::int64_t d) const {
  if (is_zero()) return *this;
  ExactValue r = *this;
  r.q_ += d;
  return r;
}

ExactValue operator+(const ExactValue& a, const ExactValue& b) {
  require_same_base(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int beta = common_base(a, b);
  const std::int64_t q = std::min(a.q_, b.q_);
  BigInt n = times_beta_pow(a.n_, beta, a.q_ - q) + times_beta_pow(b.n_, beta, b.q_ - q);
  return ExactValue(std::move(n), q, beta);
}

ExactValue operator-(const ExactValue& a, const ExactValue& b) {
  return a + (-b);
}

std::strong_ordering operator<=>(const ExactValue& a, const ExactValue& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational ExactValue::to_rational() const {
  if (q_ >= 0) return Rational(times_beta_pow(n_, beta_, q_));
  return Rational(n_, ipow(beta_, -q_));
}

double ExactValue::to_double() const {
  if (is_zero()) return 0.0;
  if (beta_ != 2) return compsum::to_double(to_rational());
  const auto [bits, drop] = top_bits(n_);
  const double magnitude = std::ldexp(static_cast<double>(bits), static_cast<int>(
      std::clamp<std::int64_t>(q_ + drop, -100000, 100000)));
  return n_.sign() < 0 ? -magnitude : magnitude;
}

std::string ExactValue::to_string() const {
  return n_.str() + "*" + std::to_string(beta_) + "^" + std::to_string(q_);
}

double ratio(const ExactValue& a, const ExactValue& b) {
  if (b.is_zero()) throw std::domain_error("ratio: zero denominator");
  if (a.is_zero()) return 0.0;
  if (a.beta() != 2 || b.beta() != 2) {
    return to_double(a.to_rational() / b.to_rational());
  }
  const auto [abits, adrop] = top_bits(a.n());
  const auto [bbits, bdrop] = top_bits(b.n());
  const double mantissa = static_cast<double>(abits) / static_cast<double>(bbits);
  const std::int64_t exponent = (a.q() + adrop) - (b.q() + bdrop);
  const double magnitude = std::ldexp(
      mantissa, static_cast<int>(std::clamp<std::int64_t>(exponent, -100000, 100000)));
  return a.sign() * b.sign() < 0 ? -magnitude : magnitude;
}

Rational rational_pow(int beta, std::int64_t k) {
  if (k >= 0) return Rational(ipow(beta, k));
  return Rational(BigInt(1), ipow(beta, -k));
}

double to_double(const Rational& r) {
  if (r.is_zero()) return 0.0;
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  // Scale so the integer quotient carries at least 64 significant bits.
  const auto num_bits = static_cast<std::int64_t>(
      boost::multiprecision::msb(boost::multiprecision::abs(num)));
  const auto den_bits = static_cast<std::int64_t>(boost::multiprecision::msb(den));
  const std::int64_t shift = 66 - (num_bits - den_bits);
  BigInt scaled_num = boost::multiprecision::abs(num);
  BigInt scaled_den = den;
  if (shift > 0) scaled_num <<= static_cast<unsigned>(shift);
  else if (shift < 0) scaled_den <<= static_cast<unsigned>(-shift);
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(scaled_num, scaled_den, quotient, remainder);
  if (!remainder.is_zero()) quotient |= 1;  // sticky
  ExactValue v(num.sign() < 0 ? BigInt(-quotient) : quotient, -shift, 2);
  return v.to_double();
}

}  // namespace compsum
