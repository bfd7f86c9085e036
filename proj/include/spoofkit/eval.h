// include/spoofkit/eval.h

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

#ifndef SPOOFKIT_EVAL_H_
#define SPOOFKIT_EVAL_H_

#include <map>
#include <string>
#include <vector>

#include "spoofkit/label.h"

namespace spoofkit {

// Per-utterance detection scores, higher = more genuine.
using ScoreSet = std::map<std::string, double>;

// Ground truth for a trial list.
using TrialKey = std::map<std::string, Label>;

struct EerResult {
  double eer = 0.0;        // ratio; percent only at the CLI boundary
  double threshold = 0.0;  // interpolated crossing point
};

// Sweeps all distinct scores as thresholds (accept as genuine iff
// score >= t), builds the FPR/FNR step functions, and returns the value at
// the crossing, linearly interpolated between the two adjacent operating
// points where sign(FNR - FPR) changes.
EerResult compute_eer(const ScoreSet& scores, const TrialKey& key);

// out = mu*primary + (1-mu)*best, per utterance id.
ScoreSet fuse_pair(const ScoreSet& primary, const ScoreSet& best, double mu);

struct Subsystem {
  std::string id;
  ScoreSet scores_dev;   // selection set
  ScoreSet scores_eval;  // held-out; may be empty when unused
};

struct TrajectoryEntry {
  std::string candidate_id;
  double dev_eer_after = 0.0;
  bool accepted = false;
};

struct FusionResult {
  std::vector<std::string> selected;  // T, in selection order
  ScoreSet fused_dev;
  ScoreSet fused_eval;
  double final_dev_eer = 0.0;
  std::vector<TrajectoryEntry> trajectory;
};

// Greedy fusion: start from the lowest-dev-EER subsystem, then repeatedly
// trial-fuse the next-best unselected subsystem; keep the fusion only when
// the dev EER does not increase, otherwise revert.  Eval scores replay
// exactly the accepted dev-side fusions.  The revert step guarantees
// final dev EER <= every single subsystem's dev EER.
FusionResult greedy_fuse(const std::vector<Subsystem>& subsystems,
                         const TrialKey& key, double mu = 0.9);

// (s - mean)/std over the set, population convention.  Opt-in pre-fusion
// normalization; fusion operates on raw scores by default.
ScoreSet znorm(const ScoreSet& scores);

// Score file: utt_id<TAB>score.  Key file: utt_id<TAB>genuine|fake.
ScoreSet load_scores(const std::string& path);
void save_scores(const ScoreSet& scores, const std::string& path);
TrialKey load_key(const std::string& path);
void save_key(const TrialKey& key, const std::string& path);

// One line per trajectory entry `candidate_id<TAB>dev_eer_after<TAB>
// accepted|rejected`, then `final_dev_eer<TAB>selected=id1,id2,...`.
std::string fusion_report(const FusionResult& result);
void save_fusion_report(const FusionResult& result, const std::string& path);

// (FPR, FNR) operating points as text, one `threshold fpr fnr` line each.
std::string det_points(const ScoreSet& scores, const TrialKey& key);

}  // namespace spoofkit

#endif  // SPOOFKIT_EVAL_H_
