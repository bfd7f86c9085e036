// include/spoofkit/forge.h

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

#ifndef SPOOFKIT_FORGE_H_
#define SPOOFKIT_FORGE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "spoofkit/audio.h"
#include "spoofkit/features.h"
#include "spoofkit/label.h"

namespace spoofkit {

enum class SpliceMode { Insert, Substitute };

struct SplicePlan {
  SpliceMode mode = SpliceMode::Insert;
  std::size_t position = 0;  // sample index into the host
  std::size_t length = 0;    // Substitute only: host region replaced
  double crossfade_ms = 0.0;
};

// Half-open sample range with its ground-truth label.  A label list always
// tiles [0, output_len) with alternating labels.
struct SegmentLabel {
  std::size_t start = 0;
  std::size_t end = 0;
  Label label = Label::Genuine;
};

struct SpliceResult {
  AudioBuffer audio;
  std::vector<SegmentLabel> labels;
};

// Builds a partially-fake utterance.  Insert mode splices `insert` into the
// host at `position`; Substitute mode replaces host[position, position+length)
// (length must equal the insert length).  Joins overlap crossfade_ms worth of
// samples with equal-power raised-cosine ramps (w_a^2 + w_b^2 = 1).  Crossfade
// overlap regions are labeled Fake, as are all insert-origin samples.
SpliceResult splice(const AudioBuffer& host, const AudioBuffer& insert,
                    const SplicePlan& plan);

// Frame-level labels under the STFT framing: frame t is Fake if any Fake
// sample overlaps [t*hop, t*hop + frame_len).
std::vector<Label> label_to_frames(const std::vector<SegmentLabel>& labels,
                                   const StftConfig& cfg, int sample_rate);

// Label-file lines: start<TAB>end<TAB>genuine|fake
void save_labels(const std::vector<SegmentLabel>& labels, const std::string& path);
std::vector<SegmentLabel> load_labels(const std::string& path);

}  // namespace spoofkit

#endif  // SPOOFKIT_FORGE_H_
