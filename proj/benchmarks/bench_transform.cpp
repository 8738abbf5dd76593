// Copyright 2026 The biozip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <vector>

#include "biozip/preprocess.hpp"
#include "biozip/signal_io.hpp"
#include "biozip/transform.hpp"

namespace biozip {
namespace {

std::vector<double> eeg_segment(std::size_t n) {
  const RawSignal s = synth_eeg(static_cast<double>(n) / 256.0 + 1.0, 256.0, 1);
  auto values = standardize(s.samples).values;
  values.resize(n);
  return values;
}

void BM_DctForward(benchmark::State& state) {
  const auto x = eeg_segment(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dct_forward(x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DctForward)->RangeMultiplier(4)->Range(64, 65536);

void BM_DctInverse(benchmark::State& state) {
  const auto block = dct_forward(eeg_segment(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(dct_inverse(block));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DctInverse)->RangeMultiplier(4)->Range(64, 65536);

void BM_DwtForward(benchmark::State& state) {
  const auto x = eeg_segment(static_cast<std::size_t>(state.range(0)));
  const int levels = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(dwt_forward(x, levels));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DwtForward)->ArgsProduct({{256, 4096, 65536}, {1, 3, 6}});

void BM_DwtInverse(benchmark::State& state) {
  const auto block = dwt_forward(eeg_segment(static_cast<std::size_t>(state.range(0))),
                                 static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(dwt_inverse(block));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DwtInverse)->ArgsProduct({{256, 4096, 65536}, {1, 3, 6}});

void BM_Threshold(benchmark::State& state) {
  const auto block = dct_forward(eeg_segment(4096));
  const ThresholdSpec spec(static_cast<double>(state.range(0)) / 1000.0);
  for (auto _ : state) benchmark::DoNotOptimize(threshold(block, spec));
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_Threshold)->Arg(5)->Arg(50);

}  // namespace
}  // namespace biozip
