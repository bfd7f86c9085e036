// include/spoofkit/augment.h

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

#ifndef SPOOFKIT_AUGMENT_H_
#define SPOOFKIT_AUGMENT_H_

#include <cstdint>
#include <string>

#include "spoofkit/audio.h"

namespace spoofkit {

struct AugmentSpec {
  enum class Kind { Noise, Music, WhiteNoise, Reverb, Fade };
  Kind kind = Kind::Noise;
  double snr_db = 0.0;  // additive kinds only
  double fade_in_frac = 1.0 / 3.0;
  double fade_out_frac = 1.0 / 3.0;
  std::uint64_t seed = 0;
};

const char* augment_kind_name(AugmentSpec::Kind kind);
AugmentSpec::Kind augment_kind_from_name(const std::string& name);

// Adds `noise` to `signal` at the requested SNR.  The noise is looped when
// shorter than the signal and seed-cropped when longer; the gain is
// g = sqrt(P_s / (P_n * 10^(snr/10))) with powers measured as mean squared
// amplitude over the mixed region.  If the mix would clip, the whole output
// is rescaled to peak 0.99.
AudioBuffer mix_at_snr(const AudioBuffer& signal, const AudioBuffer& noise,
                       double snr_db, std::uint64_t seed);

// Unit-variance Gaussian noise from the seed, then mix_at_snr.
AudioBuffer white_noise_at_snr(const AudioBuffer& signal, double snr_db,
                               std::uint64_t seed);

// Full linear convolution with the impulse response, truncated to the signal
// length, then rescaled so the output peak equals the input peak.
AudioBuffer convolve_rir(const AudioBuffer& signal, const AudioBuffer& rir);

// Linear fade-in over the first fade_in_frac*N samples and fade-out over the
// last fade_out_frac*N.  Inputs shorter than 3 samples pass through.
AudioBuffer fade(const AudioBuffer& signal, double fade_in_frac = 1.0 / 3.0,
                 double fade_out_frac = 1.0 / 3.0);

}  // namespace spoofkit

#endif  // SPOOFKIT_AUGMENT_H_
