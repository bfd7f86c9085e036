// include/spoofkit/scorer.h

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

#ifndef SPOOFKIT_SCORER_H_
#define SPOOFKIT_SCORER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "spoofkit/features.h"
#include "spoofkit/label.h"

namespace spoofkit {

// Per-dimension mean followed by per-dimension standard deviation over the
// frame axis (population convention), so a frames x D matrix pools to 2D.
using UttEmbedding = std::vector<double>;

UttEmbedding pool(const FeatureMatrix& f);

// Diagonal Gaussian per class, scored as a log-likelihood ratio with
// higher = more genuine.
struct GaussianScorer {
  std::vector<double> mean_genuine, var_genuine;
  std::vector<double> mean_fake, var_fake;
  FeatureKind feature_kind = FeatureKind::LogFbank;
  std::uint64_t config_digest = 0;

  std::size_t dim() const { return mean_genuine.size(); }
};

constexpr double kVarianceFloor = 1e-6;

// Per-class sample mean and population variance with the variance floor;
// both classes need at least 2 examples.
GaussianScorer fit(const std::vector<UttEmbedding>& embeddings,
                   const std::vector<Label>& labels);

double score(const GaussianScorer& scorer, const UttEmbedding& e);

void save_scorer(const GaussianScorer& scorer, const std::string& path);
GaussianScorer load_scorer(const std::string& path);

}  // namespace spoofkit

#endif  // SPOOFKIT_SCORER_H_
