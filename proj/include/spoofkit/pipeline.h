// include/spoofkit/pipeline.h

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

#ifndef SPOOFKIT_PIPELINE_H_
#define SPOOFKIT_PIPELINE_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "spoofkit/augment.h"
#include "spoofkit/eval.h"
#include "spoofkit/features.h"
#include "spoofkit/forge.h"

namespace spoofkit {

// Flat key-value configuration.  Unknown keys are rejected; values are
// validated against the owning module's invariants when the command runs.
struct PipelineConfig {
  int sample_rate = kDefaultSampleRate;

  FeatureKind feature = FeatureKind::LogFbank;
  StftConfig stft;
  int n_mels = 80;
  int n_mfcc = 23;
  double mel_fmin = 0.0;
  double mel_fmax = 0.0;  // <= 0 means Nyquist
  CqtConfig cqt;
  double mrp_base_freq = 1000.0;
  int mrp_n_mels = 60;

  enum class Trim { None, Fixed, Cap };
  Trim trim = Trim::None;
  double trim_seconds = 3.0;

  std::vector<AugmentSpec::Kind> augment_kinds;
  double snr_noise_min = 0.0, snr_noise_max = 20.0;  // noise and music
  double snr_white_min = 5.0, snr_white_max = 25.0;
  double fade_in_frac = 1.0 / 3.0, fade_out_frac = 1.0 / 3.0;

  SpliceMode splice_mode = SpliceMode::Insert;
  double crossfade_ms = 0.0;

  std::string noise_dir, music_dir, rir_dir;
  std::uint64_t seed = 0;
};

PipelineConfig parse_config_text(const std::string& text);
PipelineConfig parse_config_file(const std::string& path);

// Manifest lines: utt_id<TAB>path.  Output ordering of every command follows
// the manifest regardless of worker completion order.
using Manifest = std::vector<std::pair<std::string, std::string>>;

Manifest load_manifest(const std::string& path);
void save_manifest(const Manifest& manifest, const std::string& path);

struct CommandStats {
  int processed = 0;
  int failed = 0;
};

// One ADSF file <out_dir>/<id>.adsf per manifest entry; a summary line per
// file goes to `log`.  Per-file failures are logged and counted.
CommandStats cmd_extract(const PipelineConfig& cfg, const Manifest& manifest,
                         const std::string& out_dir, int jobs, std::ostream& log);

// One output per (utterance, configured kind): <out_dir>/<id>_<kind>.wav,
// plus <out_dir>/augment_manifest.tsv with `out_id source_id kind param`.
CommandStats cmd_augment(const PipelineConfig& cfg, const Manifest& manifest,
                         const std::string& out_dir, int jobs, std::ostream& log);

// One forged utterance per host: <out_dir>/<id>_pf.wav and <id>_pf.lab, plus
// <out_dir>/pf_manifest.tsv mapping output id to host, insert and plan.
CommandStats cmd_pfgen(const PipelineConfig& cfg, const Manifest& hosts,
                       const Manifest& inserts, const std::string& out_dir,
                       int jobs, std::ostream& log);

// Pools each ADSF file in the manifest, fits the Gaussian scorer on the key
// labels, writes the model file.
CommandStats cmd_train(const Manifest& features, const TrialKey& key,
                       const std::string& model_path, std::ostream& log);

// Scores each ADSF file with the model and writes utt_id<TAB>score lines.
CommandStats cmd_score(const std::string& model_path, const Manifest& features,
                       const std::string& score_path, int jobs, std::ostream& log);

EerResult cmd_eval(const std::string& score_path, const std::string& key_path);

// Subsystem ids are the score-file stems; selection set is the key given.
FusionResult cmd_fuse(const std::vector<std::string>& score_paths,
                      const std::string& key_path, double mu, bool apply_znorm,
                      const std::string& report_path);

}  // namespace spoofkit

#endif  // SPOOFKIT_PIPELINE_H_
