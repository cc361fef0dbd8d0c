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

// Streaming recursive summation: plain, and four compensated variants that
// recover each step's rounding residual with an error-free transformation.
// Accumulators are generic over a FloatBackend; the host and simulated Dekker
// arithmetics both plug in.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "compsum/eft.hpp"

namespace compsum {

enum class Algorithm { plain, kahan3op, comp6op, double6op, triple6op };

inline constexpr std::array<Algorithm, 5> kAllAlgorithms = {
    Algorithm::plain, Algorithm::kahan3op, Algorithm::comp6op, Algorithm::double6op,
    Algorithm::triple6op};

/// CLI names: plain, kahan, 6op, double6op, triple6op.
std::string_view to_string(Algorithm a);
/// Throws std::invalid_argument on an unknown name.
Algorithm parse_algorithm(std::string_view name);

/// Per-step temporaries, for traces. Which fields are set depends on the
/// algorithm; s and e are the state after the step.
template <class V>
struct StepTrace {
  std::optional<V> y, u, t, v, w;
  V s;
  V e;
};

template <class V>
struct SumPair {
  V s;
  V e;
};

template <FloatBackend A>
class Accumulator {
 public:
  using value_type = typename A::value_type;

  explicit Accumulator(Algorithm algorithm, A arith = A{})
      : algorithm_(algorithm), arith_(std::move(arith)), s_(arith_.zero()), e_(arith_.zero()) {}

  /// Resume from a saved (or deliberately altered) state.
  Accumulator(Algorithm algorithm, value_type s, value_type e, std::uint64_t count,
              A arith = A{})
      : algorithm_(algorithm), arith_(std::move(arith)), s_(std::move(s)), e_(std::move(e)),
        count_(count) {}

  void add(const value_type& x) { step(x, nullptr); }

  StepTrace<value_type> add_traced(const value_type& x) {
    StepTrace<value_type> trace{};
    step(x, &trace);
    trace.s = s_;
    trace.e = e_;
    return trace;
  }

  void add(std::span<const value_type> xs) {
    for (const auto& x : xs) add(x);
  }

  SumPair<value_type> finish() const { return {s_, e_}; }

  std::uint64_t count() const { return count_; }
  Algorithm algorithm() const { return algorithm_; }
  const A& arithmetic() const { return arith_; }

 private:
  void step(const value_type& x, StepTrace<value_type>* tr) {
    const A& a = arith_;
    switch (algorithm_) {
      case Algorithm::plain:
        s_ = a.add(s_, x);
        break;
      case Algorithm::kahan3op: {
        auto y = a.add(e_, x);
        auto r = fast_two_sum(a, s_, y);
        if (tr) tr->y = y;
        s_ = std::move(r.z);
        e_ = std::move(r.zz);
        break;
      }
      case Algorithm::comp6op: {
        auto y = a.add(e_, x);
        auto r = two_sum(a, s_, y);
        if (tr) tr->y = y;
        s_ = std::move(r.z);
        e_ = std::move(r.zz);
        break;
      }
      case Algorithm::double6op: {
        auto tv = two_sum(a, s_, x);
        auto w = a.add(e_, tv.zz);
        auto r = two_sum(a, tv.z, w);
        if (tr) {
          tr->t = tv.z;
          tr->v = tv.zz;
          tr->w = w;
        }
        s_ = std::move(r.z);
        e_ = std::move(r.zz);
        break;
      }
      case Algorithm::triple6op: {
        auto yu = two_sum(a, e_, x);
        auto tv = two_sum(a, s_, yu.z);
        auto w = a.add(yu.zz, tv.zz);
        auto r = two_sum(a, tv.z, w);
        if (tr) {
          tr->y = yu.z;
          tr->u = yu.zz;
          tr->t = tv.z;
          tr->v = tv.zz;
          tr->w = w;
        }
        s_ = std::move(r.z);
        e_ = std::move(r.zz);
        break;
      }
    }
    ++count_;
  }

  Algorithm algorithm_;
  A arith_;
  value_type s_;
  value_type e_;
  std::uint64_t count_ = 0;
};

/// Sums a whole span with one accumulator.
template <FloatBackend A>
SumPair<typename A::value_type> accumulate(Algorithm algorithm,
                                           std::span<const typename A::value_type> xs,
                                           A arith = A{}) {
  Accumulator<A> acc(algorithm, std::move(arith));
  acc.add(xs);
  return acc.finish();
}

template <std::floating_point T>
SumPair<T> accumulate(Algorithm algorithm, std::span<const T> xs) {
  return accumulate<HostArithmetic<T>>(algorithm, xs);
}

}  // namespace compsum
