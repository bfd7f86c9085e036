// include/spoofkit/audio.h

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

#ifndef SPOOFKIT_AUDIO_H_
#define SPOOFKIT_AUDIO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spoofkit {

constexpr int kDefaultSampleRate = 16000;

// Mono PCM signal, amplitudes in [-1, 1].  Immutable by convention once
// constructed; all operations return new buffers.
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = kDefaultSampleRate;

  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

struct TrimMode {
  enum class Kind { FixedSeconds, CapSeconds };
  Kind kind;
  double seconds;

  static TrimMode fixed_seconds(double s) { return {Kind::FixedSeconds, s}; }
  static TrimMode cap_seconds(double s) { return {Kind::CapSeconds, s}; }
};

// Reads a RIFF/WAVE file; PCM 16-bit mono only.  int16 values are scaled by
// 1/32768.  If required_rate > 0, a file at any other rate is rejected.
AudioBuffer load_wav(const std::string& path, int required_rate = 0);

// Writes PCM16 mono.  Samples are clamped to [-1, 1], scaled by 32768, rounded
// half away from zero and clipped to the int16 range, so a load/save round
// trip never moves a sample by more than 1/32768.
void save_wav(const AudioBuffer& audio, const std::string& path);

// FixedSeconds: crop from offset 0 when longer, repeat-tile when shorter.
// CapSeconds: keep at most the first seconds*rate samples.
// crop_seed, when given, randomizes the crop offset of longer-than-target
// inputs (FixedSeconds only); the default is the deterministic offset 0.
AudioBuffer trim_or_pad(const AudioBuffer& audio, const TrimMode& mode,
                        std::optional<std::uint64_t> crop_seed = std::nullopt);

}  // namespace spoofkit

#endif  // SPOOFKIT_AUDIO_H_
