// src/eval.cc

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

#include "spoofkit/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "spoofkit/error.h"

namespace spoofkit {

namespace {

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct OperatingPoints {
  std::vector<double> thresholds;  // distinct scores ascending, plus sentinel
  std::vector<double> fpr;
  std::vector<double> fnr;
};

// Step functions of the threshold sweep: accept as genuine iff score >= t.
// The final entry is the reject-all sentinel (FPR 0, FNR 1).
OperatingPoints sweep(const ScoreSet& scores, const TrialKey& key) {
  std::vector<double> genuine, fake;
  for (const auto& [id, label] : key) {
    auto it = scores.find(id);
    if (it == scores.end())
      throw Error(ErrorKind::MissingScore, "no score for trial " + id);
    if (!std::isfinite(it->second))
      throw Error(ErrorKind::MissingScore, "non-finite score for trial " + id);
    (label == Label::Genuine ? genuine : fake).push_back(it->second);
  }
  if (genuine.empty() || fake.empty())
    throw Error(ErrorKind::SingleClass, "key must contain both labels");

  std::sort(genuine.begin(), genuine.end());
  std::sort(fake.begin(), fake.end());

  std::vector<double> thresholds = genuine;
  thresholds.insert(thresholds.end(), fake.begin(), fake.end());
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  OperatingPoints op;
  for (double t : thresholds) {
    const std::size_t gen_below =
        std::lower_bound(genuine.begin(), genuine.end(), t) - genuine.begin();
    const std::size_t fake_at_or_above =
        fake.end() - std::lower_bound(fake.begin(), fake.end(), t);
    op.thresholds.push_back(t);
    op.fnr.push_back(static_cast<double>(gen_below) / genuine.size());
    op.fpr.push_back(static_cast<double>(fake_at_or_above) / fake.size());
  }
  // reject-all sentinel; the threshold is pinned to the last score so the
  // interpolated crossing stays finite
  op.thresholds.push_back(thresholds.back());
  op.fnr.push_back(1.0);
  op.fpr.push_back(0.0);
  return op;
}

}  // namespace

EerResult compute_eer(const ScoreSet& scores, const TrialKey& key) {
  const OperatingPoints op = sweep(scores, key);

  // sign(FNR - FPR) starts at -1 (accept everything) and ends at +1
  std::size_t k = 1;
  while (k < op.thresholds.size() && op.fnr[k] - op.fpr[k] < 0.0) ++k;

  const double d_prev = op.fnr[k - 1] - op.fpr[k - 1];
  const double d_here = op.fnr[k] - op.fpr[k];
  const double alpha = -d_prev / (d_here - d_prev);

  EerResult r;
  r.eer = op.fnr[k - 1] + alpha * (op.fnr[k] - op.fnr[k - 1]);
  r.threshold = op.thresholds[k - 1] + alpha * (op.thresholds[k] - op.thresholds[k - 1]);
  return r;
}

ScoreSet fuse_pair(const ScoreSet& primary, const ScoreSet& best, double mu) {
  if (!(mu > 0.0 && mu <= 1.0))
    throw Error(ErrorKind::BadConfig, "mu must be in (0, 1]");
  if (primary.size() != best.size())
    throw Error(ErrorKind::IdMismatch, "score sets differ in size");

  ScoreSet out;
  auto hint = out.end();
  for (const auto& [id, s] : primary) {
    auto it = best.find(id);
    if (it == best.end())
      throw Error(ErrorKind::IdMismatch, "id missing from second set: " + id);
    // mu*primary + (1-mu)*best, written so best == primary is an exact fixed
    // point and mu = 1 returns primary bit for bit.
    hint = out.emplace_hint(hint, id, s + (1.0 - mu) * (it->second - s));
  }
  return out;
}

FusionResult greedy_fuse(const std::vector<Subsystem>& subsystems,
                         const TrialKey& key, double mu) {
  if (subsystems.empty())
    throw Error(ErrorKind::EmptySet, "no subsystems to fuse");

  // Rank once by single-system dev EER; ties keep input order, which makes
  // "get best system" deterministic.
  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t i = 0; i < subsystems.size(); ++i)
    ranked.emplace_back(compute_eer(subsystems[i].scores_dev, key).eer, i);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  const bool mirror_eval =
      std::all_of(subsystems.begin(), subsystems.end(),
                  [](const Subsystem& s) { return !s.scores_eval.empty(); });

  FusionResult r;
  const Subsystem& first = subsystems[ranked.front().second];
  r.fused_dev = first.scores_dev;
  if (mirror_eval) r.fused_eval = first.scores_eval;
  r.final_dev_eer = ranked.front().first;
  r.selected.push_back(first.id);
  r.trajectory.push_back({first.id, r.final_dev_eer, true});

  for (std::size_t i = 1; i < ranked.size(); ++i) {
    const Subsystem& cand = subsystems[ranked[i].second];
    const ScoreSet trial = fuse_pair(r.fused_dev, cand.scores_dev, mu);
    const double trial_eer = compute_eer(trial, key).eer;
    const bool accept = trial_eer <= r.final_dev_eer;
    r.trajectory.push_back({cand.id, trial_eer, accept});
    if (accept) {
      r.fused_dev = trial;
      if (mirror_eval) r.fused_eval = fuse_pair(r.fused_eval, cand.scores_eval, mu);
      r.final_dev_eer = trial_eer;
      r.selected.push_back(cand.id);
    }
  }
  return r;
}

ScoreSet znorm(const ScoreSet& scores) {
  if (scores.size() < 2)
    throw Error(ErrorKind::DegenerateSpread, "need >= 2 trials to z-normalize");

  double mean = 0.0;
  for (const auto& [id, s] : scores) mean += s;
  mean /= scores.size();
  double var = 0.0;
  for (const auto& [id, s] : scores) var += (s - mean) * (s - mean);
  var /= scores.size();
  if (var <= 0.0)
    throw Error(ErrorKind::DegenerateSpread, "scores have zero spread");

  const double inv_std = 1.0 / std::sqrt(var);
  ScoreSet out;
  for (const auto& [id, s] : scores) out.emplace(id, (s - mean) * inv_std);
  return out;
}

ScoreSet load_scores(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  ScoreSet scores;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string id;
    double s;
    if (!(ls >> id >> s))
      throw Error(ErrorKind::IoError, path + ": bad score line: " + line);
    scores[id] = s;
  }
  return scores;
}

void save_scores(const ScoreSet& scores, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot create " + path);
  for (const auto& [id, s] : scores) out << id << '\t' << format_full(s) << '\n';
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

TrialKey load_key(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  TrialKey key;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string id, name;
    if (!(ls >> id >> name))
      throw Error(ErrorKind::IoError, path + ": bad key line: " + line);
    key[id] = label_from_name(name);
  }
  return key;
}

void save_key(const TrialKey& key, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot create " + path);
  for (const auto& [id, label] : key) out << id << '\t' << label_name(label) << '\n';
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

std::string fusion_report(const FusionResult& result) {
  std::ostringstream os;
  for (const TrajectoryEntry& e : result.trajectory)
    os << e.candidate_id << '\t' << format_full(e.dev_eer_after) << '\t'
       << (e.accepted ? "accepted" : "rejected") << '\n';
  os << format_full(result.final_dev_eer) << "\tselected=";
  for (std::size_t i = 0; i < result.selected.size(); ++i)
    os << (i ? "," : "") << result.selected[i];
  os << '\n';
  return os.str();
}

void save_fusion_report(const FusionResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot create " + path);
  out << fusion_report(result);
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

std::string det_points(const ScoreSet& scores, const TrialKey& key) {
  const OperatingPoints op = sweep(scores, key);
  std::ostringstream os;
  for (std::size_t i = 0; i < op.thresholds.size(); ++i)
    os << format_full(op.thresholds[i]) << '\t' << format_full(op.fpr[i]) << '\t'
       << format_full(op.fnr[i]) << '\n';
  return os.str();
}

}  // namespace spoofkit
