// include/spoofkit/reference.h

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

#ifndef SPOOFKIT_REFERENCE_H_
#define SPOOFKIT_REFERENCE_H_

#include "spoofkit/audio.h"
#include "spoofkit/features.h"

// Plain serial implementations of the hot kernels.  They exist to validate
// the OpenMP paths (tests compare outputs) and to anchor the benchmark; they
// never run in the production pipeline.
//
// reference::stft evaluates the DFT directly from its definition, so it also
// cross-checks the radix-2 FFT arithmetic (agreement within tolerance).
// reference::log_cqt and reference::convolve_truncated perform the same
// per-element arithmetic as the parallel kernels and must match bitwise.
namespace spoofkit::reference {

ComplexSpectrogram stft(const AudioBuffer& audio, const StftConfig& cfg);

FeatureMatrix log_cqt(const AudioBuffer& audio, const CqtKernels& kernels);

// Full convolution truncated to the signal length, no rescaling.
std::vector<double> convolve_truncated(const std::vector<double>& signal,
                                       const std::vector<double>& kernel);

}  // namespace spoofkit::reference

#endif  // SPOOFKIT_REFERENCE_H_
