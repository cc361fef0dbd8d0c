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

#include <vector>

#include <benchmark/benchmark.h>

#include "compsum/dekker.hpp"
#include "compsum/reference.hpp"
#include "compsum/stream.hpp"
#include "compsum/summation.hpp"

namespace {

using namespace compsum;

template <class T>
std::vector<T> stream(std::uint64_t n) {
  if constexpr (sizeof(T) == 4) {
    return draw_stream_f32(make_stream_spec(Precision::binary32, n, 1));
  } else {
    return draw_stream_f64(make_stream_spec(Precision::binary64, n, 1));
  }
}

template <class T>
void BM_Accumulate(benchmark::State& state) {
  const auto algorithm = static_cast<Algorithm>(state.range(0));
  const auto xs = stream<T>(static_cast<std::uint64_t>(state.range(1)));
  for (auto _ : state) {
    auto r = accumulate<T>(algorithm, xs);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.SetLabel(std::string(to_string(algorithm)));
}

void AllAlgorithms(benchmark::internal::Benchmark* b) {
  for (Algorithm a : kAllAlgorithms) b->Args({static_cast<long>(a), 1 << 16});
}

BENCHMARK(BM_Accumulate<float>)->Apply(AllAlgorithms);
BENCHMARK(BM_Accumulate<double>)->Apply(AllAlgorithms);

void BM_ExactReference(benchmark::State& state) {
  const auto xs = stream<double>(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    auto r = exact_reference<double>(xs);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExactReference)->Arg(1 << 16);

void BM_DekkerAdd(benchmark::State& state) {
  const auto p = dekker::SystemParams::binary64();
  const auto xs = stream<double>(1024);
  std::vector<dekker::Repr> rs;
  for (double x : xs) rs.push_back(dekker::from_host(x * 0x1p-8));
  std::size_t i = 0;
  for (auto _ : state) {
    auto z = dekker::fl_add(p, rs[i % rs.size()], rs[(i + 1) % rs.size()]);
    benchmark::DoNotOptimize(z);
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DekkerAdd);

}  // namespace

BENCHMARK_MAIN();
