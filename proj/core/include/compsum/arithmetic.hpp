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

#include <concepts>

#include "compsum/dekker.hpp"

namespace compsum {

/// The arithmetic the EFTs and accumulators are written against: rounded
/// addition and subtraction plus a zero. Nothing else couples the algorithms
/// to a number format.
template <class A>
concept FloatBackend = requires(const A& a, typename A::value_type x) {
  { a.add(x, x) } -> std::same_as<typename A::value_type>;
  { a.sub(x, x) } -> std::same_as<typename A::value_type>;
  { a.zero() } -> std::same_as<typename A::value_type>;
};

/// Native IEEE arithmetic in the default rounding mode.
template <std::floating_point T>
struct HostArithmetic {
  using value_type = T;
  T add(T x, T y) const { return x + y; }
  T sub(T x, T y) const { return x - y; }
  T zero() const { return T(0); }
};

/// The simulated Dekker system as a backend.
class DekkerArithmetic {
 public:
  using value_type = dekker::Repr;

  explicit DekkerArithmetic(dekker::SystemParams params,
                            dekker::TieBreak tie = dekker::TieBreak::to_even)
      : params_(std::move(params)), tie_(tie) {}

  dekker::Repr add(const dekker::Repr& x, const dekker::Repr& y) const {
    return dekker::fl_add(params_, x, y, tie_);
  }
  dekker::Repr sub(const dekker::Repr& x, const dekker::Repr& y) const {
    return dekker::fl_sub(params_, x, y, tie_);
  }
  dekker::Repr zero() const { return {0, params_.emin()}; }

  const dekker::SystemParams& params() const { return params_; }
  dekker::TieBreak tie() const { return tie_; }

  /// Exact value of an element, for comparisons in tests and traces.
  ExactValue exact(const dekker::Repr& x) const { return dekker::to_exact(params_, x); }
  /// The canonical element m * beta^e, rounded if it is not representable.
  dekker::Repr make(long long m, std::int64_t e) const {
    return dekker::round_exact(params_, ExactValue(BigInt(m), e, params_.beta()), tie_);
  }

 private:
  dekker::SystemParams params_;
  dekker::TieBreak tie_;
};

static_assert(FloatBackend<HostArithmetic<float>>);
static_assert(FloatBackend<HostArithmetic<double>>);
static_assert(FloatBackend<DekkerArithmetic>);

}  // namespace compsum
