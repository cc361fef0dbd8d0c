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

// Error-free transformations of addition: z = fl(x + y) together with the
// residual zz such that z + zz == x + y exactly.
//
// The host-float versions need round-to-nearest-even and must not be
// compiled with value-changing optimizations (reassociation or contraction
// into FMA destroys the residual). The build passes -ffp-contract=off; the
// check below rejects -ffast-math outright.

#include <cassert>
#include <cmath>
#include <concepts>

#include "compsum/arithmetic.hpp"

#if defined(__FAST_MATH__)
#error "compsum error-free transformations are incorrect under -ffast-math"
#endif

namespace compsum {

template <class V>
struct EftResult {
  V z;
  V zz;

  friend bool operator==(const EftResult&, const EftResult&) = default;
};

/// Three-operation EFT. Exact when x and y admit representations with
/// e(x) >= e(y) (|x| >= |y| is sufficient). The precondition is not checked;
/// when it fails, z is still fl(x + y) but zz may be wrong.
template <FloatBackend A>
EftResult<typename A::value_type> fast_two_sum(const A& arith,
                                               const typename A::value_type& x,
                                               const typename A::value_type& y) {
  auto z = arith.add(x, y);
  auto w = arith.sub(z, x);
  auto zz = arith.sub(y, w);
  return {std::move(z), std::move(zz)};
}

/// Six-operation EFT, exact for all operands absent overflow. On the Dekker
/// backend it stays exact under clipping overflow as well.
template <FloatBackend A>
EftResult<typename A::value_type> two_sum(const A& arith,
                                          const typename A::value_type& x,
                                          const typename A::value_type& y) {
  auto z = arith.add(x, y);
  auto w = arith.sub(z, x);
  auto z1 = arith.sub(y, w);
  auto v = arith.sub(w, z);
  auto z2 = arith.add(x, v);
  auto zz = arith.add(z1, z2);
  return {std::move(z), std::move(zz)};
}

template <std::floating_point T>
EftResult<T> fast_two_sum(T x, T y) {
  return fast_two_sum(HostArithmetic<T>{}, x, y);
}

template <std::floating_point T>
EftResult<T> two_sum(T x, T y) {
  return two_sum(HostArithmetic<T>{}, x, y);
}

/// fast_two_sum with a debug assertion of |x| >= |y|. Stricter than needed
/// (the exponent condition admits more pairs) but cheap to evaluate.
template <std::floating_point T>
EftResult<T> fast_two_sum_ordered(T x, T y) {
  assert(!(std::abs(x) < std::abs(y)) && "fast_two_sum_ordered: |x| < |y|");
  return fast_two_sum(x, y);
}

}  // namespace compsum
