// tests/test_scorer.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spoofkit/error.h"
#include "spoofkit/rng.h"
#include "spoofkit/scorer.h"

#include "oracle.h"

using namespace spoofkit;

namespace {

FeatureMatrix matrix_of(int frames, int dims, const std::vector<double>& values) {
  FeatureMatrix f;
  f.kind = FeatureKind::LogFbank;
  f.frames = frames;
  f.dims = dims;
  f.values = values;
  return f;
}

// Direct per-dimension log density, grouped differently from the library.
double oracle_log_density(const UttEmbedding& e, const std::vector<double>& mean,
                          const std::vector<double>& var) {
  double acc = 0.0;
  for (std::size_t d = 0; d < e.size(); ++d) {
    const double diff = e[d] - mean[d];
    acc += -0.5 * std::log(2.0 * oracle::kPi * var[d]) - diff * diff / (2.0 * var[d]);
  }
  return acc;
}

}  // namespace

TEST_CASE("pool of a single frame is the frame plus zero stds") {
  const FeatureMatrix f = matrix_of(1, 3, {1.5, -2.0, 0.25});
  const UttEmbedding e = pool(f);
  REQUIRE(e.size() == 6);
  CHECK(e[0] == 1.5);
  CHECK(e[1] == -2.0);
  CHECK(e[2] == 0.25);
  CHECK(e[3] == 0.0);
  CHECK(e[4] == 0.0);
  CHECK(e[5] == 0.0);
}

TEST_CASE("pool of a constant matrix has zero spread") {
  const FeatureMatrix f = matrix_of(5, 2, std::vector<double>(10, 3.0));
  const UttEmbedding e = pool(f);
  CHECK(e == UttEmbedding{3.0, 3.0, 0.0, 0.0});
}

TEST_CASE("pool matches a direct two-pass computation") {
  Rng rng(21);
  std::vector<double> values(40);
  for (double& v : values) v = rng.uniform(-5.0, 5.0);
  const FeatureMatrix f = matrix_of(10, 4, values);

  const UttEmbedding e = pool(f);
  for (int d = 0; d < 4; ++d) {
    double mean = 0.0;
    for (int t = 0; t < 10; ++t) mean += values[t * 4 + d];
    mean /= 10.0;
    double var = 0.0;
    for (int t = 0; t < 10; ++t) {
      const double diff = values[t * 4 + d] - mean;
      var += diff * diff;
    }
    var /= 10.0;  // population convention
    CHECK(std::abs(e[d] - mean) < 1e-9);
    CHECK(std::abs(e[4 + d] - std::sqrt(var)) < 1e-9);
  }
}

TEST_CASE("pool rejects an empty matrix") {
  FeatureMatrix f;
  try {
    pool(f);
    FAIL("expected EmptyFeature");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyFeature);
  }
}

TEST_CASE("fit two-point statistics") {
  const std::vector<UttEmbedding> embeddings = {{0.0}, {2.0}, {10.0}, {12.0}};
  const std::vector<Label> labels = {Label::Genuine, Label::Genuine, Label::Fake,
                                     Label::Fake};
  const GaussianScorer s = fit(embeddings, labels);
  CHECK(s.mean_genuine == std::vector<double>{1.0});
  CHECK(s.var_genuine == std::vector<double>{1.0});
  CHECK(s.mean_fake == std::vector<double>{11.0});
  CHECK(s.var_fake == std::vector<double>{1.0});
}

TEST_CASE("fit floors the variance of identical examples") {
  const std::vector<UttEmbedding> embeddings = {{4.0}, {4.0}, {0.0}, {1.0}};
  const std::vector<Label> labels = {Label::Genuine, Label::Genuine, Label::Fake,
                                     Label::Fake};
  const GaussianScorer s = fit(embeddings, labels);
  CHECK(s.var_genuine == std::vector<double>{1e-6});
}

TEST_CASE("fit error paths") {
  const std::vector<UttEmbedding> one_class = {{0.0}, {1.0}};
  try {
    fit(one_class, {Label::Genuine, Label::Genuine});
    FAIL("expected MissingClass");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingClass);
  }
  try {
    fit({{0.0}, {1.0}, {2.0}}, {Label::Genuine, Label::Genuine, Label::Fake});
    FAIL("expected TooFewExamples");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooFewExamples);
  }
}

TEST_CASE("score symmetry cases") {
  GaussianScorer s;
  s.mean_genuine = {1.0, 1.0};
  s.mean_fake = {-1.0, -1.0};
  s.var_genuine = {0.5, 0.5};
  s.var_fake = {0.5, 0.5};

  CHECK(score(s, {1.0, 1.0}) > 0.0);
  CHECK(std::abs(score(s, {0.0, 0.0})) < 1e-9);  // equidistant
  CHECK(score(s, {-1.0, -1.0}) < 0.0);
}

TEST_CASE("score matches the closed-form densities") {
  Rng rng(22);
  GaussianScorer s;
  for (int d = 0; d < 8; ++d) {
    s.mean_genuine.push_back(rng.uniform(-3.0, 3.0));
    s.mean_fake.push_back(rng.uniform(-3.0, 3.0));
    s.var_genuine.push_back(rng.uniform(0.1, 2.0));
    s.var_fake.push_back(rng.uniform(0.1, 2.0));
  }
  for (int round = 0; round < 20; ++round) {
    UttEmbedding e;
    for (int d = 0; d < 8; ++d) e.push_back(rng.uniform(-4.0, 4.0));
    const double expected = oracle_log_density(e, s.mean_genuine, s.var_genuine) -
                            oracle_log_density(e, s.mean_fake, s.var_fake);
    CHECK(std::abs(score(s, e) - expected) < 1e-9);
  }
}

TEST_CASE("swapping class labels negates every score exactly") {
  Rng rng(23);
  std::vector<UttEmbedding> embeddings;
  std::vector<Label> labels, flipped;
  for (int i = 0; i < 20; ++i) {
    embeddings.push_back({rng.gaussian(), rng.gaussian() + (i % 2 ? 2.0 : 0.0)});
    labels.push_back(i % 2 ? Label::Fake : Label::Genuine);
    flipped.push_back(i % 2 ? Label::Genuine : Label::Fake);
  }
  const GaussianScorer a = fit(embeddings, labels);
  const GaussianScorer b = fit(embeddings, flipped);
  for (const UttEmbedding& e : embeddings) CHECK(score(a, e) == -score(b, e));
}

TEST_CASE("score increases along the segment from fake mean to genuine mean") {
  GaussianScorer s;
  s.mean_genuine = {2.0, -1.0};
  s.mean_fake = {-2.0, 3.0};
  s.var_genuine = {0.7, 0.7};
  s.var_fake = {0.7, 0.7};

  double prev = -1e300;
  for (int i = 0; i <= 20; ++i) {
    const double t = i / 20.0;
    const UttEmbedding e = {s.mean_fake[0] + t * (s.mean_genuine[0] - s.mean_fake[0]),
                            s.mean_fake[1] + t * (s.mean_genuine[1] - s.mean_fake[1])};
    const double v = score(s, e);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("score rejects mismatched dimensions") {
  GaussianScorer s;
  s.mean_genuine = {0.0};
  s.mean_fake = {1.0};
  s.var_genuine = {1.0};
  s.var_fake = {1.0};
  try {
    score(s, {0.0, 1.0});
    FAIL("expected DimMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimMismatch);
  }
}

TEST_CASE("model save/load preserves scores bit for bit") {
  oracle::TempDir tmp("scorer");
  Rng rng(24);
  std::vector<UttEmbedding> embeddings;
  std::vector<Label> labels;
  for (int i = 0; i < 30; ++i) {
    embeddings.push_back(
        {rng.gaussian() + (i % 2 ? 0.0 : 1.5), rng.gaussian(), rng.uniform(0.0, 1.0)});
    labels.push_back(i % 2 ? Label::Fake : Label::Genuine);
  }
  GaussianScorer s = fit(embeddings, labels);
  s.feature_kind = FeatureKind::Mfcc;
  s.config_digest = 0xdeadbeefULL;

  save_scorer(s, tmp.file("model.txt"));
  const GaussianScorer t = load_scorer(tmp.file("model.txt"));
  CHECK(t.feature_kind == FeatureKind::Mfcc);
  CHECK(t.config_digest == 0xdeadbeefULL);
  for (const UttEmbedding& e : embeddings) CHECK(score(s, e) == score(t, e));
}

TEST_CASE("well-separated synthetic classes train to zero error") {
  Rng rng(25);
  std::vector<UttEmbedding> embeddings;
  std::vector<Label> labels;
  for (int i = 0; i < 100; ++i) {
    const bool genuine = i % 2 == 0;
    UttEmbedding e;
    for (int d = 0; d < 4; ++d)
      e.push_back(rng.gaussian() * 0.3 + (genuine ? 2.0 : -2.0));
    embeddings.push_back(e);
    labels.push_back(genuine ? Label::Genuine : Label::Fake);
  }
  const GaussianScorer s = fit(embeddings, labels);
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    const double v = score(s, embeddings[i]);
    CHECK((labels[i] == Label::Genuine ? v > 0.0 : v < 0.0));
  }
}
