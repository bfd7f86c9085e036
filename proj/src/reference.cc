// src/reference.cc

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

#include "spoofkit/reference.h"

#include <cmath>

#include "spoofkit/error.h"

namespace spoofkit::reference {

namespace {

constexpr double kPi = 3.14159265358979323846;

double window_value(WindowKind kind, int i, int len) {
  if (len < 2) return 1.0;
  const double c = std::cos(2.0 * kPi * i / (len - 1));
  return kind == WindowKind::Hamming ? 0.54 - 0.46 * c : 0.5 - 0.5 * c;
}

}  // namespace

ComplexSpectrogram stft(const AudioBuffer& audio, const StftConfig& cfg) {
  const int rate = audio.sample_rate;
  const int frame_len = cfg.frame_len_samples(rate);
  const int hop = cfg.hop_samples(rate);
  const int n = static_cast<int>(audio.samples.size());
  if (n < frame_len) throw Error(ErrorKind::TooShort, "audio shorter than one frame");

  const int frames = 1 + (n - frame_len) / hop;
  const int bins = cfg.fft_size / 2 + 1;

  ComplexSpectrogram spec;
  spec.frames = frames;
  spec.bins = bins;
  spec.sample_rate = rate;
  spec.fft_size = cfg.fft_size;
  spec.values.resize(static_cast<std::size_t>(frames) * bins);

  std::vector<double> windowed(cfg.fft_size);
  for (int t = 0; t < frames; ++t) {
    const double* x = audio.samples.data() + static_cast<std::size_t>(t) * hop;
    for (int i = 0; i < cfg.fft_size; ++i)
      windowed[i] = i < frame_len ? x[i] * window_value(cfg.window, i, frame_len) : 0.0;
    for (int k = 0; k < bins; ++k) {
      double re = 0.0, im = 0.0;
      for (int i = 0; i < cfg.fft_size; ++i) {
        const double ang = -2.0 * kPi * k * i / cfg.fft_size;
        re += windowed[i] * std::cos(ang);
        im += windowed[i] * std::sin(ang);
      }
      spec.at(t, k) = {re, im};
    }
  }
  return spec;
}

FeatureMatrix log_cqt(const AudioBuffer& audio, const CqtKernels& ker) {
  const int n = static_cast<int>(audio.samples.size());
  if (n < ker.max_len) throw Error(ErrorKind::TooShort, "audio shorter than longest kernel");
  const int frames = 1 + (n - ker.max_len) / ker.hop;

  FeatureMatrix f;
  f.kind = FeatureKind::LogCqt;
  f.frames = frames;
  f.dims = ker.n_bins;
  f.values.resize(static_cast<std::size_t>(frames) * ker.n_bins);
  f.config_digest = ker.config_digest;

  for (int t = 0; t < frames; ++t) {
    const double* x = audio.samples.data() + static_cast<std::size_t>(t) * ker.hop;
    for (int k = 0; k < ker.n_bins; ++k) {
      const int len = ker.lengths[k];
      const double* cs = ker.cos_part[k].data();
      const double* sn = ker.sin_part[k].data();
      double re = 0.0, im = 0.0;
      for (int i = 0; i < len; ++i) {
        re += x[i] * cs[i];
        im += x[i] * sn[i];
      }
      f.at(t, k) = std::log(std::sqrt(re * re + im * im) + kLogFloor);
    }
  }
  return f;
}

std::vector<double> convolve_truncated(const std::vector<double>& signal,
                                       const std::vector<double>& kernel) {
  const std::size_t n = signal.size();
  const std::size_t m = kernel.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t kmax = std::min(i + 1, m);
    double acc = 0.0;
    for (std::size_t k = 0; k < kmax; ++k) acc += kernel[k] * signal[i - k];
    out[i] = acc;
  }
  return out;
}

}  // namespace spoofkit::reference
