// tests/test_eval.cc

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
#include "spoofkit/eval.h"
#include "spoofkit/rng.h"

#include "oracle.h"

using namespace spoofkit;

namespace {

ScoreSet scores_of(std::initializer_list<std::pair<const char*, double>> init) {
  ScoreSet s;
  for (const auto& [id, v] : init) s[id] = v;
  return s;
}

TrialKey key_of(std::initializer_list<std::pair<const char*, Label>> init) {
  TrialKey k;
  for (const auto& [id, l] : init) k[id] = l;
  return k;
}

const TrialKey kSixKey = key_of({{"g1", Label::Genuine},
                                 {"g2", Label::Genuine},
                                 {"g3", Label::Genuine},
                                 {"f1", Label::Fake},
                                 {"f2", Label::Fake},
                                 {"f3", Label::Fake}});

}  // namespace

TEST_CASE("compute_eer on perfect separation") {
  const ScoreSet s = scores_of({{"g1", 0.9}, {"g2", 0.8}, {"f1", 0.2}, {"f2", 0.1}});
  const TrialKey k = key_of({{"g1", Label::Genuine},
                             {"g2", Label::Genuine},
                             {"f1", Label::Fake},
                             {"f2", Label::Fake}});
  const EerResult r = compute_eer(s, k);
  CHECK(r.eer == 0.0);
  // the threshold separates the classes
  CHECK(r.threshold > 0.2);
  CHECK(r.threshold <= 0.8);
}

TEST_CASE("compute_eer with one crossing error pair") {
  // for t in (0.7, 0.75): FNR = 1/3 and FPR = 1/3
  const ScoreSet s = scores_of({{"g1", 0.9},
                                {"g2", 0.8},
                                {"g3", 0.7},
                                {"f1", 0.75},
                                {"f2", 0.2},
                                {"f3", 0.1}});
  const EerResult r = compute_eer(s, kSixKey);
  CHECK(r.eer == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(oracle::brute_force_eer(s, kSixKey) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("compute_eer of non-informative equal scores is one half") {
  const ScoreSet s = scores_of({{"g1", 0.3}, {"g2", 0.3}, {"f1", 0.3}, {"f2", 0.3}});
  const TrialKey k = key_of({{"g1", Label::Genuine},
                             {"g2", Label::Genuine},
                             {"f1", Label::Fake},
                             {"f2", Label::Fake}});
  CHECK(compute_eer(s, k).eer == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("compute_eer error paths") {
  const ScoreSet s = scores_of({{"g1", 0.5}});
  try {
    compute_eer(s, key_of({{"g1", Label::Genuine}, {"g2", Label::Genuine}}));
    FAIL("expected MissingScore");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingScore);
  }
  try {
    compute_eer(scores_of({{"g1", 0.5}, {"g2", 0.4}}),
                key_of({{"g1", Label::Genuine}, {"g2", Label::Genuine}}));
    FAIL("expected SingleClass");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingleClass);
  }
}

TEST_CASE("compute_eer agrees with the midpoint-sweep oracle") {
  Rng rng(31);
  for (int round = 0; round < 40; ++round) {
    ScoreSet scores;
    TrialKey key;
    oracle::random_instance(rng, 10 + rng.index(400), round % 2 == 0, &scores, &key);
    const double got = compute_eer(scores, key).eer;
    const double expected = oracle::brute_force_eer(scores, key);
    CHECK(std::abs(got - expected) < 1e-12);
  }
}

TEST_CASE("negating scores and flipping labels preserves the EER") {
  Rng rng(32);
  for (int round = 0; round < 20; ++round) {
    ScoreSet scores, negated;
    TrialKey key, flipped;
    for (int i = 0; i < 60; ++i) {
      const std::string id = "u" + std::to_string(i);
      const bool genuine = i < 30;
      const double s = rng.gaussian() + (genuine ? 0.8 : 0.0);
      scores[id] = s;
      negated[id] = -s;
      key[id] = genuine ? Label::Genuine : Label::Fake;
      flipped[id] = genuine ? Label::Fake : Label::Genuine;
    }
    CHECK(std::abs(compute_eer(scores, key).eer - compute_eer(negated, flipped).eer) <
          1e-12);
  }
}

TEST_CASE("EER is invariant under strictly increasing score transforms") {
  Rng rng(33);
  ScoreSet scores;
  TrialKey key;
  oracle::random_instance(rng, 200, true, &scores, &key);

  ScoreSet warped;
  for (const auto& [id, s] : scores) warped[id] = std::tanh(s) * 3.0 + s;
  CHECK(compute_eer(scores, key).eer == compute_eer(warped, key).eer);
}

TEST_CASE("EER stays below one half on informative instances") {
  Rng rng(34);
  for (int round = 0; round < 25; ++round) {
    ScoreSet scores;
    TrialKey key;
    oracle::random_instance(rng, 50 + rng.index(200), true, &scores, &key);
    CHECK(compute_eer(scores, key).eer <= 0.5);
    CHECK(compute_eer(scores, key).eer >= 0.0);
  }
}

TEST_CASE("fuse_pair fixed values") {
  const ScoreSet primary = scores_of({{"u1", 0.2}});
  const ScoreSet best = scores_of({{"u1", 1.0}});
  CHECK(fuse_pair(primary, best, 0.9).at("u1") == 0.28);
  CHECK(fuse_pair(primary, best, 1.0).at("u1") == 0.2);
}

TEST_CASE("fuse_pair fixed point and linearity") {
  Rng rng(35);
  ScoreSet p, b;
  for (int i = 0; i < 50; ++i) {
    const std::string id = "u" + std::to_string(i);
    p[id] = rng.uniform(-100.0, 100.0);
    b[id] = rng.uniform(-100.0, 100.0);
  }

  // best == primary is an exact fixed point for any mu
  for (double mu : {0.1, 0.5, 0.9, 0.37}) {
    const ScoreSet fused = fuse_pair(p, p, mu);
    CHECK(fused == p);
  }

  // linearity: fusing 2x-scaled inputs doubles the output exactly
  ScoreSet p2, b2;
  for (const auto& [id, v] : p) p2[id] = 2.0 * v;
  for (const auto& [id, v] : b) b2[id] = 2.0 * v;
  const ScoreSet f1 = fuse_pair(p, b, 0.9);
  const ScoreSet f2 = fuse_pair(p2, b2, 0.9);
  for (const auto& [id, v] : f1) CHECK(f2.at(id) == 2.0 * v);
}

TEST_CASE("fuse_pair rejects mismatched ids and bad mu") {
  const ScoreSet p = scores_of({{"a", 1.0}});
  const ScoreSet b = scores_of({{"b", 1.0}});
  try {
    fuse_pair(p, b, 0.9);
    FAIL("expected IdMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IdMismatch);
  }
  CHECK_THROWS_AS(fuse_pair(p, p, 0.0), Error);
  CHECK_THROWS_AS(fuse_pair(p, p, 1.5), Error);
}

TEST_CASE("greedy_fuse with a single subsystem returns it unchanged") {
  Subsystem s;
  s.id = "only";
  s.scores_dev = scores_of({{"g1", 1.0}, {"g2", 0.8}, {"f1", -1.0}, {"f2", 0.9}});
  const TrialKey key = key_of({{"g1", Label::Genuine},
                               {"g2", Label::Genuine},
                               {"f1", Label::Fake},
                               {"f2", Label::Fake}});

  const FusionResult r = greedy_fuse({s}, key);
  CHECK(r.selected == std::vector<std::string>{"only"});
  CHECK(r.fused_dev == s.scores_dev);
  CHECK(r.trajectory.size() == 1);
  CHECK(r.trajectory[0].accepted);
}

TEST_CASE("greedy_fuse keeps both of two identical subsystems") {
  Subsystem a, b;
  a.id = "a";
  b.id = "b";
  a.scores_dev = scores_of({{"g1", 2.0}, {"g2", 1.0}, {"f1", 0.5}, {"f2", -1.0}});
  b.scores_dev = a.scores_dev;
  const TrialKey key = key_of({{"g1", Label::Genuine},
                               {"g2", Label::Genuine},
                               {"f1", Label::Fake},
                               {"f2", Label::Fake}});

  const FusionResult r = greedy_fuse({a, b}, key);
  CHECK(r.selected == std::vector<std::string>{"a", "b"});
  CHECK(r.fused_dev == a.scores_dev);  // exact fixed point
  CHECK(r.final_dev_eer == compute_eer(a.scores_dev, key).eer);
}

TEST_CASE("greedy_fuse accepts a helpful subsystem and reverts a harmful one") {
  Subsystem s1, s2, s3;
  s1.id = "A";
  s1.scores_dev = scores_of({{"g1", 10.0}, {"g2", 9.0}, {"g3", 0.5},
                             {"f1", 1.0}, {"f2", -5.0}, {"f3", -6.0}});
  s2.id = "B";
  s2.scores_dev = scores_of({{"g1", -3.0}, {"g2", 8.0}, {"g3", 50.0},
                             {"f1", -50.0}, {"f2", 0.0}, {"f3", 2.0}});
  s3.id = "C";
  s3.scores_dev = scores_of({{"g1", 1.0}, {"g2", 1.0}, {"g3", -200.0},
                             {"f1", 0.0}, {"f2", 0.0}, {"f3", 0.0}});

  // all three single systems sit at EER 1/3; input order breaks the ties
  CHECK(compute_eer(s1.scores_dev, kSixKey).eer == doctest::Approx(1.0 / 3.0));
  CHECK(compute_eer(s2.scores_dev, kSixKey).eer == doctest::Approx(1.0 / 3.0));
  CHECK(compute_eer(s3.scores_dev, kSixKey).eer == doctest::Approx(1.0 / 3.0));

  const FusionResult r = greedy_fuse({s1, s2, s3}, kSixKey, 0.9);

  CHECK(r.selected == std::vector<std::string>{"A", "B"});
  REQUIRE(r.trajectory.size() == 3);
  CHECK(r.trajectory[0].candidate_id == "A");
  CHECK(r.trajectory[0].accepted);
  CHECK(r.trajectory[1].candidate_id == "B");
  CHECK(r.trajectory[1].accepted);
  CHECK(r.trajectory[1].dev_eer_after == 0.0);
  CHECK(r.trajectory[2].candidate_id == "C");
  CHECK_FALSE(r.trajectory[2].accepted);

  // final scores are exactly 0.9*s1 + 0.1*s2
  const ScoreSet expected = fuse_pair(s1.scores_dev, s2.scores_dev, 0.9);
  CHECK(r.fused_dev == expected);
  CHECK(r.final_dev_eer == 0.0);
}

TEST_CASE("greedy_fuse final EER never exceeds the best single system") {
  Rng rng(36);
  for (int round = 0; round < 30; ++round) {
    TrialKey key;
    std::vector<Subsystem> subsystems(5);
    const std::size_t n = 30 + rng.index(100);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string id = "u" + std::to_string(i);
      const bool genuine = i == 0 ? true : i == 1 ? false : rng.uniform() < 0.4;
      key[id] = genuine ? Label::Genuine : Label::Fake;
      for (std::size_t s = 0; s < 5; ++s)
        subsystems[s].scores_dev[id] =
            rng.gaussian() + (genuine ? rng.uniform(0.0, 2.0) : 0.0);
    }
    for (std::size_t s = 0; s < 5; ++s) subsystems[s].id = "s" + std::to_string(s);

    double best_single = 1e300;
    for (const Subsystem& s : subsystems)
      best_single = std::min(best_single, compute_eer(s.scores_dev, key).eer);

    const FusionResult r = greedy_fuse(subsystems, key);
    CHECK(r.final_dev_eer <= best_single);  // the revert step enforces this
    CHECK(r.selected.size() >= 1);
    CHECK(r.trajectory.size() == 5);
  }
}

TEST_CASE("greedy_fuse replays accepted fusions on the eval side") {
  Rng rng(37);
  TrialKey key;
  std::vector<Subsystem> subsystems(3);
  for (std::size_t i = 0; i < 40; ++i) {
    const std::string id = "u" + std::to_string(i);
    const bool genuine = i < 20;
    key[id] = genuine ? Label::Genuine : Label::Fake;
    for (std::size_t s = 0; s < 3; ++s) {
      subsystems[s].scores_dev[id] = rng.gaussian() + (genuine ? 1.0 : 0.0);
      subsystems[s].scores_eval["e" + std::to_string(i)] = rng.gaussian();
    }
  }
  for (std::size_t s = 0; s < 3; ++s) subsystems[s].id = "s" + std::to_string(s);

  const FusionResult r = greedy_fuse(subsystems, key);
  REQUIRE(!r.fused_eval.empty());

  // replay the accepted trajectory by hand
  auto find = [&](const std::string& id) -> const Subsystem& {
    for (const Subsystem& s : subsystems)
      if (s.id == id) return s;
    FAIL("unknown id");
    return subsystems[0];
  };
  ScoreSet expected = find(r.selected[0]).scores_eval;
  for (std::size_t i = 1; i < r.selected.size(); ++i)
    expected = fuse_pair(expected, find(r.selected[i]).scores_eval, 0.9);
  CHECK(r.fused_eval == expected);
}

TEST_CASE("greedy_fuse rejects an empty set") {
  try {
    greedy_fuse({}, kSixKey);
    FAIL("expected EmptySet");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptySet);
  }
}

TEST_CASE("znorm two-point and moment checks") {
  const ScoreSet z = znorm(scores_of({{"a", 1.0}, {"b", 3.0}}));
  CHECK(z.at("a") == -1.0);
  CHECK(z.at("b") == 1.0);

  Rng rng(38);
  ScoreSet s;
  for (int i = 0; i < 200; ++i) s["u" + std::to_string(i)] = rng.uniform(-7.0, 13.0);
  const ScoreSet n = znorm(s);

  double mean = 0.0, var = 0.0;
  for (const auto& [id, v] : n) mean += v;
  mean /= n.size();
  for (const auto& [id, v] : n) var += (v - mean) * (v - mean);
  var /= n.size();
  CHECK(std::abs(mean) < 1e-9);
  CHECK(std::abs(var - 1.0) < 1e-9);

  // strictly monotone: ordering is preserved
  std::vector<std::string> by_raw, by_norm;
  for (const auto& [id, v] : s) by_raw.push_back(id);
  by_norm = by_raw;
  std::sort(by_raw.begin(), by_raw.end(),
            [&](const auto& a, const auto& b) { return s.at(a) < s.at(b); });
  std::sort(by_norm.begin(), by_norm.end(),
            [&](const auto& a, const auto& b) { return n.at(a) < n.at(b); });
  CHECK(by_raw == by_norm);
}

TEST_CASE("znorm rejects degenerate inputs") {
  try {
    znorm(scores_of({{"a", 1.0}}));
    FAIL("expected DegenerateSpread");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateSpread);
  }
  try {
    znorm(scores_of({{"a", 2.0}, {"b", 2.0}}));
    FAIL("expected DegenerateSpread");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateSpread);
  }
}

TEST_CASE("score and key files round trip") {
  oracle::TempDir tmp("eval_io");
  Rng rng(39);
  ScoreSet scores;
  TrialKey key;
  for (int i = 0; i < 50; ++i) {
    const std::string id = "utt" + std::to_string(i);
    scores[id] = rng.gaussian() * 1e3;
    key[id] = i % 3 == 0 ? Label::Genuine : Label::Fake;
  }

  save_scores(scores, tmp.file("s.txt"));
  save_key(key, tmp.file("k.txt"));
  CHECK(load_scores(tmp.file("s.txt")) == scores);  // %.17g round trip
  CHECK(load_key(tmp.file("k.txt")) == key);
}

TEST_CASE("fusion report format") {
  FusionResult r;
  r.trajectory = {{"A", 0.25, true}, {"B", 0.125, true}, {"C", 0.5, false}};
  r.selected = {"A", "B"};
  r.final_dev_eer = 0.125;

  const std::string report = fusion_report(r);
  CHECK(report ==
        "A\t0.25\taccepted\n"
        "B\t0.125\taccepted\n"
        "C\t0.5\trejected\n"
        "0.125\tselected=A,B\n");
}

TEST_CASE("det_points emits one operating point per distinct score") {
  const ScoreSet s = scores_of({{"g1", 0.9}, {"g2", 0.8}, {"f1", 0.2}, {"f2", 0.1}});
  const TrialKey k = key_of({{"g1", Label::Genuine},
                             {"g2", Label::Genuine},
                             {"f1", Label::Fake},
                             {"f2", Label::Fake}});
  const std::string text = det_points(s, k);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);  // 4 + sentinel
}
