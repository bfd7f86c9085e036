// src/augment.cc

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

#include "spoofkit/augment.h"

#include <algorithm>
#include <cmath>

#include "spoofkit/error.h"
#include "spoofkit/rng.h"

namespace spoofkit {

namespace {

double mean_square(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return v.empty() ? 0.0 : acc / v.size();
}

double peak_abs(const std::vector<double>& v) {
  double p = 0.0;
  for (double x : v) p = std::max(p, std::abs(x));
  return p;
}

}  // namespace

const char* augment_kind_name(AugmentSpec::Kind kind) {
  switch (kind) {
    case AugmentSpec::Kind::Noise: return "noise";
    case AugmentSpec::Kind::Music: return "music";
    case AugmentSpec::Kind::WhiteNoise: return "whitenoise";
    case AugmentSpec::Kind::Reverb: return "reverb";
    case AugmentSpec::Kind::Fade: return "fade";
  }
  return "unknown";
}

AugmentSpec::Kind augment_kind_from_name(const std::string& name) {
  if (name == "noise") return AugmentSpec::Kind::Noise;
  if (name == "music") return AugmentSpec::Kind::Music;
  if (name == "whitenoise") return AugmentSpec::Kind::WhiteNoise;
  if (name == "reverb") return AugmentSpec::Kind::Reverb;
  if (name == "fade") return AugmentSpec::Kind::Fade;
  throw Error(ErrorKind::BadConfig, "unknown augment kind: " + name);
}

AudioBuffer mix_at_snr(const AudioBuffer& signal, const AudioBuffer& noise,
                       double snr_db, std::uint64_t seed) {
  if (signal.sample_rate != noise.sample_rate)
    throw Error(ErrorKind::RateMismatch, "signal and noise rates differ");
  if (signal.samples.empty() || noise.samples.empty())
    throw Error(ErrorKind::SilentInput, "empty signal or noise");

  const std::size_t n = signal.samples.size();

  // Match the noise to the signal length: loop when short, seed-crop when long.
  std::vector<double> matched(n);
  if (noise.samples.size() >= n) {
    std::size_t offset = 0;
    if (noise.samples.size() > n) {
      Rng rng(seed);
      offset = rng.index(noise.samples.size() - n + 1);
    }
    std::copy(noise.samples.begin() + offset, noise.samples.begin() + offset + n,
              matched.begin());
  } else {
    for (std::size_t i = 0; i < n; ++i)
      matched[i] = noise.samples[i % noise.samples.size()];
  }

  const double p_signal = mean_square(signal.samples);
  const double p_noise = mean_square(matched);
  if (p_signal <= 0.0) throw Error(ErrorKind::SilentInput, "zero-power signal");
  if (p_noise <= 0.0) throw Error(ErrorKind::SilentInput, "zero-power noise");

  const double gain = std::sqrt(p_signal / (p_noise * std::pow(10.0, snr_db / 10.0)));

  AudioBuffer out;
  out.sample_rate = signal.sample_rate;
  out.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.samples[i] = signal.samples[i] + gain * matched[i];

  const double peak = peak_abs(out.samples);
  if (peak > 1.0) {
    const double scale = 0.99 / peak;
    for (double& x : out.samples) x *= scale;
  }
  return out;
}

AudioBuffer white_noise_at_snr(const AudioBuffer& signal, double snr_db,
                               std::uint64_t seed) {
  if (signal.samples.empty())
    throw Error(ErrorKind::SilentInput, "empty signal");

  Rng rng(seed);
  AudioBuffer noise;
  noise.sample_rate = signal.sample_rate;
  noise.samples.resize(signal.samples.size());
  for (double& x : noise.samples) x = rng.gaussian();

  return mix_at_snr(signal, noise, snr_db, seed);
}

AudioBuffer convolve_rir(const AudioBuffer& signal, const AudioBuffer& rir) {
  if (signal.sample_rate != rir.sample_rate)
    throw Error(ErrorKind::RateMismatch, "signal and rir rates differ");
  if (rir.samples.empty()) throw Error(ErrorKind::EmptyRir, "empty impulse response");

  const std::size_t n = signal.samples.size();
  const std::size_t m = rir.samples.size();

  AudioBuffer out;
  out.sample_rate = signal.sample_rate;
  out.samples.assign(n, 0.0);

  const double* x = signal.samples.data();
  const double* h = rir.samples.data();
  double* y = out.samples.data();

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    const std::size_t kmax = std::min(static_cast<std::size_t>(i) + 1, m);
    double acc = 0.0;
    for (std::size_t k = 0; k < kmax; ++k) acc += h[k] * x[i - k];
    y[i] = acc;
  }

  const double peak_in = peak_abs(signal.samples);
  const double peak_out = peak_abs(out.samples);
  if (peak_out > 0.0 && peak_in > 0.0) {
    const double scale = peak_in / peak_out;
    for (double& v : out.samples) v *= scale;
  }
  return out;
}

AudioBuffer fade(const AudioBuffer& signal, double fade_in_frac,
                 double fade_out_frac) {
  if (fade_in_frac < 0.0 || fade_out_frac < 0.0 ||
      fade_in_frac + fade_out_frac > 1.0)
    throw Error(ErrorKind::BadConfig, "fade fractions must be >= 0 and sum <= 1");

  const std::size_t n = signal.samples.size();
  if (n < 3) return signal;

  AudioBuffer out = signal;
  const std::size_t l_in = static_cast<std::size_t>(std::llround(fade_in_frac * n));
  const std::size_t l_out = static_cast<std::size_t>(std::llround(fade_out_frac * n));

  if (l_in == 1) {
    out.samples[0] = 0.0;
  } else if (l_in >= 2) {
    for (std::size_t i = 0; i < l_in; ++i)
      out.samples[i] *= static_cast<double>(i) / (l_in - 1);
  }
  if (l_out == 1) {
    out.samples[n - 1] = 0.0;
  } else if (l_out >= 2) {
    for (std::size_t j = 0; j < l_out; ++j)
      out.samples[n - l_out + j] *= static_cast<double>(l_out - 1 - j) / (l_out - 1);
  }
  return out;
}

}  // namespace spoofkit
