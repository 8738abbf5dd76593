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

#include "biozip/container.hpp"
#include "biozip/pipeline.hpp"

namespace biozip {
namespace {

const RawSignal& minute() {
  static const RawSignal s = synth_eeg(60.0, 256.0, 42);
  return s;
}

PipelineConfig config_from(const benchmark::State& state) {
  PipelineConfig c;
  c.transform = state.range(0) == 0 ? TransformKind::kDct : TransformKind::kDwt;
  c.codec = state.range(1) == 0 ? CodecKind::kRle : CodecKind::kArith;
  c.num_segments = static_cast<std::size_t>(state.range(2));
  c.thr = ThresholdSpec(0.01);
  c.dwt_levels = 3;
  return c;
}

void set_label(benchmark::State& state, const PipelineConfig& c) {
  state.SetLabel(std::string(to_string(c.transform)) + "/" + std::string(to_string(c.codec)));
}

void BM_Compress(benchmark::State& state) {
  const PipelineConfig c = config_from(state);
  for (auto _ : state) benchmark::DoNotOptimize(compress(minute(), c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(minute().size()));
  set_label(state, c);
}
BENCHMARK(BM_Compress)->ArgsProduct({{0, 1}, {0, 1}, {1, 60}})->Unit(benchmark::kMillisecond);

void BM_Decompress(benchmark::State& state) {
  const PipelineConfig c = config_from(state);
  const CompressedFile f = compress(minute(), c).file;
  for (auto _ : state) benchmark::DoNotOptimize(decompress(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(minute().size()));
  set_label(state, c);
}
BENCHMARK(BM_Decompress)->ArgsProduct({{0, 1}, {0, 1}, {1, 60}})->Unit(benchmark::kMillisecond);

void BM_ContainerRoundTrip(benchmark::State& state) {
  PipelineConfig c;
  c.num_segments = 60;
  const CompressedFile f = compress(minute(), c).file;
  for (auto _ : state) benchmark::DoNotOptimize(deserialize(serialize(f)));
}
BENCHMARK(BM_ContainerRoundTrip);

}  // namespace
}  // namespace biozip
