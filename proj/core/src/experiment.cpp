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

#include "compsum/experiment.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "compsum/reference.hpp"

namespace compsum {

namespace {

BoundInput relative_input(Precision p, std::uint64_t n) {
  return {n, unit_roundoff_binary(mantissa_digits(p)), Rational(1), std::nullopt};
}

template <class T>
T flip_bit(T x, int bit) {
  using Bits = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;
  return std::bit_cast<T>(std::bit_cast<Bits>(x) ^ (Bits{1} << bit));
}

template <class T>
std::vector<ExperimentRecord> run_typed(const RandomStreamSpec& spec, const std::vector<T>& xs,
                                        std::span<const Algorithm> algorithms,
                                        std::optional<FaultInjection> fault) {
  const ReferenceSums ref = exact_reference(std::span<const T>(xs));
  std::vector<ExperimentRecord> records;
  for (Algorithm a : algorithms) {
    Accumulator<HostArithmetic<T>> acc(a);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      acc.add(xs[i]);
      if (fault && fault->after_step == i + 1) {
        const auto [s, e] = acc.finish();
        acc = Accumulator<HostArithmetic<T>>(a, flip_bit(s, fault->bit), e, acc.count());
      }
    }
    const auto [s, e] = acc.finish();
    records.push_back(score<T>(a, spec.precision, spec.seed, xs, s, e, ref.sum, ref.sum_abs));
  }
  return records;
}

}  // namespace

int default_fault_bit(Precision p) { return p == Precision::binary32 ? 22 : 51; }

void require_bound_applicable(Algorithm a, Precision p, std::uint64_t n) {
  (void)bound_pair(a, relative_input(p, n));
}

Rational relative_bound(Algorithm a, Precision p, std::uint64_t n) {
  return bound_pair(a, relative_input(p, n));
}

template <class T>
ExperimentRecord score(Algorithm a, Precision p, std::uint64_t seed, std::span<const T> xs,
                       T s, T e, const ExactValue& sum, const ExactValue& sum_abs) {
  ExperimentRecord r;
  r.algorithm = a;
  r.n = xs.size();
  r.seed = seed;
  r.precision = p;

  std::optional<Rational> bound;
  try {
    bound = relative_bound(a, p, r.n == 0 ? 1 : r.n);
    r.bound = to_double(*bound);
  } catch (const BoundInapplicable&) {
    r.applicable = false;
    r.bound = std::numeric_limits<double>::quiet_NaN();
  }

  if (!std::isfinite(s) || !std::isfinite(e)) {
    r.obs_pair = r.obs_s = std::numeric_limits<double>::infinity();
    r.violated = r.applicable;
    return r;
  }

  const ExactValue pair_err = (ExactValue::from_double(s) + ExactValue::from_double(e) - sum).abs();
  const ExactValue s_err = (ExactValue::from_double(s) - sum).abs();
  const double inf = std::numeric_limits<double>::infinity();
  r.obs_pair = sum_abs.is_zero() ? (pair_err.is_zero() ? 0.0 : inf) : ratio(pair_err, sum_abs);
  r.obs_s = sum.is_zero() ? (s_err.is_zero() ? 0.0 : inf) : ratio(s_err, sum.abs());
  if (r.applicable) {
    r.violated = pair_err.to_rational() > *bound * sum_abs.to_rational();
  }
  return r;
}

template ExperimentRecord score<float>(Algorithm, Precision, std::uint64_t,
                                       std::span<const float>, float, float,
                                       const ExactValue&, const ExactValue&);
template ExperimentRecord score<double>(Algorithm, Precision, std::uint64_t,
                                        std::span<const double>, double, double,
                                        const ExactValue&, const ExactValue&);

std::vector<ExperimentRecord> run_accumulation(const RandomStreamSpec& spec,
                                               std::span<const Algorithm> algorithms,
                                               std::optional<FaultInjection> fault) {
  if (fault) {
    const int width = spec.precision == Precision::binary32 ? 32 : 64;
    if (fault->bit < 0 || fault->bit >= width) {
      throw std::invalid_argument("fault injection: bit out of range");
    }
  }
  if (spec.precision == Precision::binary32) {
    return run_typed<float>(spec, draw_stream_f32(spec), algorithms, fault);
  }
  return run_typed<double>(spec, draw_stream_f64(spec), algorithms, fault);
}

std::string format_record(const ExperimentRecord& r, char sep) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s%c%llu%c%llu%c%s%c%.6e%c%.6e%c%.6e%c%s",
                std::string(to_string(r.algorithm)).c_str(), sep,
                static_cast<unsigned long long>(r.n), sep,
                static_cast<unsigned long long>(r.seed), sep,
                std::string(to_string(r.precision)).c_str(), sep, r.obs_pair, sep, r.obs_s, sep,
                r.bound, sep, r.violated ? "true" : "false");
  return buf;
}

void write_records(std::ostream& os, std::span<const ExperimentRecord> records, char sep) {
  os << "algo" << sep << "n" << sep << "seed" << sep << "precision" << sep << "obs_pair" << sep
     << "obs_s" << sep << "bound" << sep << "violated\n";
  for (const auto& r : records) os << format_record(r, sep) << '\n';
}

}  // namespace compsum
