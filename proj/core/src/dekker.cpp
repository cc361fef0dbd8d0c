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

#include "compsum/dekker.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace compsum::dekker {

namespace {

BigInt abs_big(const BigInt& a) { return boost::multiprecision::abs(a); }

// n * beta^k for k >= 0.
BigInt scale_up(const BigInt& n, int beta, std::int64_t k) {
  if (k == 0) return n;
  if (beta == 2) return n << static_cast<unsigned>(k);
  return n * ipow(beta, k);
}

// Rounds a / beta^k (a >= 0, k > 0) to an integer, returning the quotient
// and whether the discarded part is below, at, or above one half.
std::pair<BigInt, int> divide_with_half(const BigInt& a, int beta, std::int64_t k) {
  BigInt quotient, remainder;
  if (beta == 2) {
    const auto shift = static_cast<unsigned>(k);
    quotient = a >> shift;
    remainder = a - (quotient << shift);
    if (remainder.is_zero()) return {quotient, -2};
    const BigInt half = BigInt(1) << (shift - 1);
    return {quotient, remainder < half ? -1 : (remainder == half ? 0 : 1)};
  }
  const BigInt divisor = ipow(beta, k);
  boost::multiprecision::divide_qr(a, divisor, quotient, remainder);
  if (remainder.is_zero()) return {quotient, -2};
  const BigInt twice = remainder * 2;
  return {quotient, twice < divisor ? -1 : (twice == divisor ? 0 : 1)};
}

Repr clipped(const SystemParams& p, int sign) {
  BigInt m = p.M() - 1;
  return {sign < 0 ? BigInt(-m) : m, p.emax()};
}

}  // namespace

SystemParams::SystemParams(int beta, int t, std::int64_t emin, std::int64_t emax)
    : beta_(beta), t_(t), emin_(emin), emax_(emax) {
  if (beta < 2) throw std::invalid_argument("SystemParams: beta must be >= 2");
  if (t < 1) throw std::invalid_argument("SystemParams: t must be >= 1");
  if (emin > emax) throw std::invalid_argument("SystemParams: emin must not exceed emax");
  M_ = ipow(beta, t);
}

Rational SystemParams::unit_roundoff() const {
  return Rational(1, 2) * rational_pow(beta_, 1 - t_);
}

std::string SystemParams::to_string() const {
  return "beta=" + std::to_string(beta_) + " t=" + std::to_string(t_) +
         " emin=" + std::to_string(emin_) + " emax=" + std::to_string(emax_);
}

bool is_valid_repr(const SystemParams& p, const Repr& r) {
  return abs_big(r.m) < p.M() && r.e >= p.emin() && r.e <= p.emax();
}

void require_valid(const SystemParams& p, const Repr& r) {
  if (!is_valid_repr(p, r)) {
    throw std::invalid_argument("invalid representation " + to_string(r, p.beta()) +
                                " in system " + p.to_string());
  }
}

Repr canonicalize(const SystemParams& p, const Repr& r) {
  require_valid(p, r);
  if (r.m.is_zero()) return {0, p.emin()};
  const std::int64_t normal_e = digit_count(r.m, p.beta()) + r.e - p.t();
  const std::int64_t target = std::max(normal_e, p.emin());
  // Validity gives |m| < beta^t, hence target <= e and the scaling is exact.
  return {scale_up(r.m, p.beta(), r.e - target), target};
}

ExactValue to_exact(const SystemParams& p, const Repr& r) {
  return ExactValue(r.m, r.e, p.beta());
}

bool same_value(const SystemParams& p, const Repr& a, const Repr& b) {
  return to_exact(p, a) == to_exact(p, b);
}

std::pair<std::int64_t, std::int64_t> exponent_span(const SystemParams& p, const Repr& r) {
  if (r.m.is_zero()) return {p.emin(), p.emax()};
  const Repr c = canonicalize(p, r);
  const ExactValue v = to_exact(p, r);
  return {c.e, std::min(v.q(), p.emax())};
}

std::vector<Repr> representations(const SystemParams& p, const Repr& r) {
  const auto [lo, hi] = exponent_span(p, r);
  const ExactValue v = to_exact(p, r);
  std::vector<Repr> out;
  for (std::int64_t e = lo; e <= hi; ++e) {
    if (v.is_zero()) {
      out.push_back({0, e});
    } else {
      out.push_back({scale_up(v.n(), p.beta(), v.q() - e), e});
    }
  }
  return out;
}

BigInt number_count(const SystemParams& p) {
  const BigInt& M = p.M();
  const BigInt lower = ipow(p.beta(), p.t() - 1);
  const BigInt nonnegative = M + BigInt(p.emax() - p.emin()) * (M - lower);
  return nonnegative * 2 - 1;
}

std::vector<Repr> enumerate_numbers(const SystemParams& p, std::size_t limit) {
  if (number_count(p) > limit) {
    throw std::length_error("enumerate_numbers: system " + p.to_string() +
                            " exceeds the enumeration limit");
  }
  const auto M = static_cast<std::int64_t>(p.M());
  const auto lower = static_cast<std::int64_t>(ipow(p.beta(), p.t() - 1));

  std::vector<Repr> positive;
  for (std::int64_t m = 1; m < M; ++m) positive.push_back({m, p.emin()});
  for (std::int64_t e = p.emin() + 1; e <= p.emax(); ++e) {
    for (std::int64_t m = lower; m < M; ++m) positive.push_back({m, e});
  }

  std::vector<Repr> all;
  all.reserve(positive.size() * 2 + 1);
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) all.push_back(negate(*it));
  all.push_back({0, p.emin()});
  all.insert(all.end(), positive.begin(), positive.end());
  return all;
}

Repr round_exact(const SystemParams& p, const ExactValue& v, TieBreak tie) {
  if (v.is_zero()) return {0, p.emin()};
  if (v.beta() != p.beta()) throw std::invalid_argument("round_exact: base mismatch");

  const int sign = v.sign();
  const BigInt a = abs_big(v.n());
  // Smallest admissible exponent with |v| < beta^t * beta^E.
  const std::int64_t E = std::max(p.emin(), digit_count(a, p.beta()) + v.q() - p.t());
  if (E > p.emax()) return clipped(p, sign);

  BigInt m;
  if (v.q() >= E) {
    m = scale_up(a, p.beta(), v.q() - E);
  } else {
    auto [quotient, half] = divide_with_half(a, p.beta(), E - v.q());
    m = std::move(quotient);
    bool up = half > 0;
    if (half == 0) {
      // Midpoints only arise for even beta, where integer parity is the
      // parity of the last mantissa digit.
      up = tie == TieBreak::to_even ? boost::multiprecision::bit_test(m, 0)
                                     : sign > 0;
    }
    if (up) m += 1;
  }

  std::int64_t e = E;
  if (m == p.M()) {
    m = p.M() / p.beta();
    e += 1;
    if (e > p.emax()) return clipped(p, sign);
  }
  if (sign < 0) m = -m;
  return {std::move(m), e};
}

ExactValue exact_sum(const SystemParams& p, const Repr& x, const Repr& y) {
  return to_exact(p, x) + to_exact(p, y);
}

Repr negate(const Repr& x) { return {-x.m, x.e}; }

Repr fl_add(const SystemParams& p, const Repr& x, const Repr& y, TieBreak tie) {
  require_valid(p, x);
  require_valid(p, y);
  return round_exact(p, exact_sum(p, x, y), tie);
}

Repr fl_sub(const SystemParams& p, const Repr& x, const Repr& y, TieBreak tie) {
  return fl_add(p, x, negate(y), tie);
}

ExactValue max_magnitude(const SystemParams& p) {
  return ExactValue(p.M() - 1, p.emax(), p.beta());
}

bool overflows(const SystemParams& p, const ExactValue& v) {
  return v.abs() > max_magnitude(p);
}

Repr from_host(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("from_host: non-finite value");
  const auto bits = std::bit_cast<std::uint64_t>(x);
  const auto biased = static_cast<std::int64_t>((bits >> 52) & 0x7FF);
  const std::uint64_t fraction = bits & ((std::uint64_t{1} << 52) - 1);
  BigInt m;
  std::int64_t e;
  if (biased == 0) {
    m = fraction;
    e = -1074;
  } else {
    m = fraction | (std::uint64_t{1} << 52);
    e = biased - 1075;
  }
  if (bits >> 63) m = -m;
  if (m.is_zero()) return {0, -1074};
  return {m, e};
}

Repr from_host(float x) {
  if (!std::isfinite(x)) throw std::invalid_argument("from_host: non-finite value");
  const auto bits = std::bit_cast<std::uint32_t>(x);
  const auto biased = static_cast<std::int64_t>((bits >> 23) & 0xFF);
  const std::uint32_t fraction = bits & ((std::uint32_t{1} << 23) - 1);
  BigInt m;
  std::int64_t e;
  if (biased == 0) {
    m = fraction;
    e = -149;
  } else {
    m = fraction | (std::uint32_t{1} << 23);
    e = biased - 150;
  }
  if (bits >> 31) m = -m;
  if (m.is_zero()) return {0, -149};
  return {m, e};
}

double to_double(const Repr& r) {
  if (r.m.is_zero()) return 0.0;
  return ExactValue(r.m, r.e, 2).to_double();
}

float to_float(const Repr& r) { return static_cast<float>(to_double(r)); }

std::string to_string(const Repr& r, int beta) {
  return r.m.str() + "*" + std::to_string(beta) + "^" + std::to_string(r.e);
}

}  // namespace compsum::dekker
