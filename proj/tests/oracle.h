// tests/oracle.h

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

// Independent oracles for the test suites.  Everything here recomputes
// expected values from first principles and must stay decoupled from the
// library implementations it checks.

#ifndef SPOOFKIT_TESTS_ORACLE_H_
#define SPOOFKIT_TESTS_ORACLE_H_

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include "spoofkit/eval.h"
#include "spoofkit/label.h"
#include "spoofkit/rng.h"

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

// Direct DFT of one windowed frame, straight from the definition.
inline std::vector<std::complex<double>> dft_frame(
    const std::vector<double>& frame, const std::vector<double>& window,
    int fft_size) {
  std::vector<double> padded(fft_size, 0.0);
  for (std::size_t i = 0; i < frame.size(); ++i) padded[i] = frame[i] * window[i];
  std::vector<std::complex<double>> out(fft_size / 2 + 1);
  for (int k = 0; k <= fft_size / 2; ++k) {
    double re = 0.0, im = 0.0;
    for (int n = 0; n < fft_size; ++n) {
      const double ang = -2.0 * kPi * k * n / fft_size;
      re += padded[n] * std::cos(ang);
      im += padded[n] * std::sin(ang);
    }
    out[k] = {re, im};
  }
  return out;
}

// Brute-force EER: sweep thresholds midway between adjacent distinct scores
// (plus below-min and above-max), count errors directly at each threshold,
// then interpolate at the sign change of FNR - FPR.
inline double brute_force_eer(const spoofkit::ScoreSet& scores,
                              const spoofkit::TrialKey& key) {
  std::vector<double> all;
  for (const auto& [id, label] : key) all.push_back(scores.at(id));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<double> thresholds;
  thresholds.push_back(all.front() - 1.0);  // accept everything
  for (std::size_t i = 0; i + 1 < all.size(); ++i)
    thresholds.push_back((all[i] + all[i + 1]) / 2.0);
  thresholds.push_back(all.back());       // accept only the max scores
  thresholds.push_back(all.back() + 1.0); // reject everything

  std::vector<double> fpr, fnr;
  for (double t : thresholds) {
    std::size_t n_gen = 0, n_fake = 0, gen_rej = 0, fake_acc = 0;
    for (const auto& [id, label] : key) {
      const double s = scores.at(id);
      if (label == spoofkit::Label::Genuine) {
        ++n_gen;
        if (s < t) ++gen_rej;
      } else {
        ++n_fake;
        if (s >= t) ++fake_acc;
      }
    }
    fnr.push_back(static_cast<double>(gen_rej) / n_gen);
    fpr.push_back(static_cast<double>(fake_acc) / n_fake);
  }

  std::size_t k = 1;
  while (k < thresholds.size() && fnr[k] - fpr[k] < 0.0) ++k;
  const double d0 = fnr[k - 1] - fpr[k - 1];
  const double d1 = fnr[k] - fpr[k];
  const double alpha = -d0 / (d1 - d0);
  return fnr[k - 1] + alpha * (fnr[k] - fnr[k - 1]);
}

// Random score/key instance.  `informative` biases genuine scores upward so
// the EER stays below chance.
inline void random_instance(spoofkit::Rng& rng, std::size_t n_trials,
                            bool informative, spoofkit::ScoreSet* scores,
                            spoofkit::TrialKey* key) {
  scores->clear();
  key->clear();
  // at least one of each label
  for (std::size_t i = 0; i < n_trials; ++i) {
    const std::string id = "u" + std::to_string(i);
    const bool genuine = i == 0 ? true : i == 1 ? false : rng.uniform() < 0.5;
    (*key)[id] = genuine ? spoofkit::Label::Genuine : spoofkit::Label::Fake;
    double s = rng.gaussian();
    if (informative && genuine) s += 1.5;
    // occasional exact ties exercise the one-step-per-threshold rule
    if (rng.uniform() < 0.1) s = std::round(s * 4.0) / 4.0;
    (*scores)[id] = s;
  }
}

// Scratch directory under the system temp root, removed on destruction.
struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("spoofkit_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }

  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace oracle

#endif  // SPOOFKIT_TESTS_ORACLE_H_
