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

#include "compsum/bounds.hpp"

#include <cmath>
#include <cstdio>

namespace compsum {

namespace {

void check_input(const BoundInput& b) {
  if (b.n < 1) throw std::invalid_argument("bound: n must be >= 1");
  if (b.eps <= 0 || b.eps > Rational(1, 2)) {
    throw std::invalid_argument("bound: eps must lie in (0, 1/2]");
  }
  if (b.sum_abs < 0) throw std::invalid_argument("bound: sum_abs must be >= 0");
  if (b.abs_sum && (*b.abs_sum < 0 || *b.abs_sum > b.sum_abs)) {
    throw std::invalid_argument("bound: need 0 <= abs_sum <= sum_abs");
  }
}

Rational count(std::uint64_t n) { return Rational(BigInt(n)); }

// tau S + k sigma/(1 - k sigma) S + k sigma tau/(1 - k sigma) S, k = n - 1.
Rational compensated_form(const Rational& sigma, const Rational& tau, const BoundInput& b,
                          const char* what) {
  const Rational k = count(b.n - 1);
  const Rational ks = k * sigma;
  if (ks >= 1) throw BoundInapplicable(std::string(what) + ": (n-1)*sigma >= 1");
  const Rational denom = 1 - ks;
  return tau * b.sum_abs + ks / denom * b.sum_abs + ks * tau / denom * b.sum_abs;
}

}  // namespace

Rational unit_roundoff_binary(int t) { return rational_pow(2, -t); }

SigmaTau sigma_tau(Algorithm kind, const Rational& eps) {
  const Rational e2 = eps * eps;
  const Rational e3 = e2 * eps;
  switch (kind) {
    case Algorithm::double6op: return {2 * e2 + e3, e2};
    case Algorithm::triple6op: return {e2 + e3 + e2 * e2, 2 * e2 + e3};
    default: throw std::invalid_argument("sigma_tau: only double6op and triple6op");
  }
}

Rational bound_plain(const BoundInput& b) {
  check_input(b);
  const Rational ne = count(b.n) * b.eps;
  if (ne >= 1) throw BoundInapplicable("plain bound: n*eps >= 1");
  return ne / (1 - ne) * b.sum_abs;
}

Rational bound_kahan_leading(const BoundInput& b) {
  check_input(b);
  return 2 * b.eps * b.sum_abs;
}

Rational bound_kahan_validation(const BoundInput& b) {
  check_input(b);
  return (2 * b.eps + 4 * count(b.n) * b.eps * b.eps) * b.sum_abs;
}

Rational bound_6op_pair(const BoundInput& b) {
  check_input(b);
  const Rational e2 = b.eps * b.eps;
  const Rational k = count(b.n - 1);
  const Rational ke2 = k * e2;
  if (ke2 >= 1) throw BoundInapplicable("6op bound: (n-1)*eps^2 >= 1");
  const Rational denom = 1 - ke2;
  return b.eps * b.sum_abs + ke2 / denom * b.sum_abs + ke2 * b.eps / denom * b.sum_abs;
}

Rational bound_6op_s_only(const BoundInput& b) {
  if (!b.abs_sum) throw std::invalid_argument("6op s-only bound: abs_sum is required");
  return (1 + b.eps) * bound_6op_pair(b) + b.eps * *b.abs_sum;
}

Rational bound_compensated(Algorithm kind, const BoundInput& b) {
  check_input(b);
  const SigmaTau st = sigma_tau(kind, b.eps);
  return compensated_form(st.sigma, st.tau, b,
                          kind == Algorithm::double6op ? "double6op bound" : "triple6op bound");
}

Rational bound_leading(Algorithm kind, const BoundInput& b) {
  check_input(b);
  const Rational n = count(b.n);
  const Rational e2 = b.eps * b.eps;
  switch (kind) {
    case Algorithm::plain: return n * b.eps * b.sum_abs;
    case Algorithm::kahan3op: return 2 * b.eps * b.sum_abs;
    case Algorithm::comp6op: return (b.eps + (n - 1) * e2) * b.sum_abs;
    case Algorithm::double6op: return (2 * n - 1) * e2 * b.sum_abs;
    case Algorithm::triple6op: return (n + 1) * e2 * b.sum_abs;
  }
  throw std::invalid_argument("bound_leading: unknown algorithm");
}

Rational bound_pair(Algorithm kind, const BoundInput& b) {
  switch (kind) {
    case Algorithm::plain: return bound_plain(b);
    case Algorithm::kahan3op: return bound_kahan_validation(b);
    case Algorithm::comp6op: return bound_6op_pair(b);
    case Algorithm::double6op:
    case Algorithm::triple6op: return bound_compensated(kind, b);
  }
  throw std::invalid_argument("bound_pair: unknown algorithm");
}

std::string format_scientific(const Rational& r, int digits) {
  if (digits < 1) throw std::invalid_argument("format_scientific: digits must be >= 1");
  if (r == 0) {
    return "0." + std::string(static_cast<std::size_t>(digits - 1), '0') + "E+00";
  }
  const bool negative = r < 0;
  const Rational a = negative ? Rational(-r) : r;

  // Decimal exponent k with 10^k <= a < 10^(k+1).
  std::int64_t k = 0;
  {
    const double approx = to_double(a);
    k = static_cast<std::int64_t>(std::floor(std::log10(approx)));
    while (a < rational_pow(10, k)) --k;
    while (a >= rational_pow(10, k + 1)) ++k;
  }
  auto round_at = [&](std::int64_t exp10) {
    const Rational scaled = a * rational_pow(10, digits - 1 - exp10);
    BigInt q, rem;
    boost::multiprecision::divide_qr(boost::multiprecision::numerator(scaled),
                                     boost::multiprecision::denominator(scaled), q, rem);
    const Rational frac = scaled - Rational(q);
    if (frac > Rational(1, 2) || (frac == Rational(1, 2) && boost::multiprecision::bit_test(q, 0))) {
      q += 1;
    }
    return q;
  };
  BigInt mantissa = round_at(k);
  if (mantissa == ipow(10, digits)) {
    ++k;
    mantissa = round_at(k);
  }
  std::string d = mantissa.str();
  std::string out = negative ? "-" : "";
  out += d.substr(0, 1);
  if (digits > 1) out += "." + d.substr(1);
  char exp[32];
  std::snprintf(exp, sizeof exp, "E%c%02lld", k < 0 ? '-' : '+',
                static_cast<long long>(k < 0 ? -k : k));
  return out + exp;
}

}  // namespace compsum
