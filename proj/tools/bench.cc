// tools/bench.cc

// Copyright 2026  Spoofkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels vs the OpenMP production kernels on identical
// inputs.  Run with --benchmark_min_time=... to tighten timings.

#include <benchmark/benchmark.h>

#include "spoofkit/augment.h"
#include "spoofkit/features.h"
#include "spoofkit/reference.h"
#include "spoofkit/rng.h"

namespace {

using namespace spoofkit;

AudioBuffer noise_signal(double seconds, std::uint64_t seed) {
  AudioBuffer audio;
  audio.sample_rate = kDefaultSampleRate;
  audio.samples.resize(static_cast<std::size_t>(seconds * kDefaultSampleRate));
  Rng rng(seed);
  for (double& x : audio.samples) x = 0.3 * rng.gaussian();
  return audio;
}

void BM_StftReference(benchmark::State& state) {
  const AudioBuffer audio = noise_signal(1.0, 1);
  const StftConfig cfg;
  for (auto _ : state) {
    auto spec = reference::stft(audio, cfg);
    benchmark::DoNotOptimize(spec.values.data());
  }
}
BENCHMARK(BM_StftReference)->Unit(benchmark::kMillisecond);

void BM_StftParallel(benchmark::State& state) {
  const AudioBuffer audio = noise_signal(1.0, 1);
  const StftConfig cfg;
  for (auto _ : state) {
    auto spec = stft(audio, cfg);
    benchmark::DoNotOptimize(spec.values.data());
  }
}
BENCHMARK(BM_StftParallel)->Unit(benchmark::kMillisecond);

void BM_CqtReference(benchmark::State& state) {
  const AudioBuffer audio = noise_signal(2.0, 2);
  const CqtKernels kernels = make_cqt_kernels(CqtConfig{}, kDefaultSampleRate);
  for (auto _ : state) {
    auto f = reference::log_cqt(audio, kernels);
    benchmark::DoNotOptimize(f.values.data());
  }
}
BENCHMARK(BM_CqtReference)->Unit(benchmark::kMillisecond);

void BM_CqtParallel(benchmark::State& state) {
  const AudioBuffer audio = noise_signal(2.0, 2);
  const CqtKernels kernels = make_cqt_kernels(CqtConfig{}, kDefaultSampleRate);
  for (auto _ : state) {
    auto f = log_cqt(audio, kernels);
    benchmark::DoNotOptimize(f.values.data());
  }
}
BENCHMARK(BM_CqtParallel)->Unit(benchmark::kMillisecond);

void BM_ConvolveReference(benchmark::State& state) {
  const AudioBuffer audio = noise_signal(2.0, 3);
  const AudioBuffer rir = noise_signal(0.25, 4);
  for (auto _ : state) {
    auto out = reference::convolve_truncated(audio.samples, rir.samples);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ConvolveReference)->Unit(benchmark::kMillisecond);

void BM_ConvolveParallel(benchmark::State& state) {
  const AudioBuffer audio = noise_signal(2.0, 3);
  const AudioBuffer rir = noise_signal(0.25, 4);
  for (auto _ : state) {
    auto out = convolve_rir(audio, rir);
    benchmark::DoNotOptimize(out.samples.data());
  }
}
BENCHMARK(BM_ConvolveParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
