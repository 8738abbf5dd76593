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

#include "biozip/entropy.hpp"
#include "biozip/preprocess.hpp"
#include "biozip/signal_io.hpp"
#include "biozip/transform.hpp"

namespace biozip {
namespace {

// Thresholded DCT coefficients of a 16 s synthetic segment; range(0) is the
// threshold in thousandths.
std::vector<double> coefficients(std::int64_t thr_milli) {
  const RawSignal s = synth_eeg(16.0, 256.0, 2);
  const auto block = dct_forward(standardize(s.samples).values);
  return threshold(block, ThresholdSpec(static_cast<double>(thr_milli) / 1000.0))
      .block.coefficients;
}

void BM_RleEncode(benchmark::State& state) {
  const auto c = coefficients(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rle_encode(c));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(c.size() * 8));
}
BENCHMARK(BM_RleEncode)->Arg(0)->Arg(5)->Arg(50);

void BM_RleDecode(benchmark::State& state) {
  const auto p = rle_encode(coefficients(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rle_decode(p));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(p.decoded_length * 8));
}
BENCHMARK(BM_RleDecode)->Arg(0)->Arg(5)->Arg(50);

void BM_ArithEncode(benchmark::State& state) {
  const auto c = coefficients(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(arith_encode(c));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(c.size() * 8));
}
BENCHMARK(BM_ArithEncode)->Arg(0)->Arg(5)->Arg(50);

void BM_ArithDecode(benchmark::State& state) {
  const auto p = arith_encode(coefficients(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(arith_decode(p));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(p.decoded_length * 8));
}
BENCHMARK(BM_ArithDecode)->Arg(0)->Arg(5)->Arg(50);

}  // namespace
}  // namespace biozip
