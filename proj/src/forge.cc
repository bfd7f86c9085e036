// src/forge.cc

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

#include "spoofkit/forge.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "spoofkit/error.h"

namespace spoofkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Equal-power raised-cosine ramp pair over L overlap samples.
void crossfade_weights(int len, int i, double* w_down, double* w_up) {
  const double t = len >= 2 ? static_cast<double>(i) / (len - 1) : 0.5;
  *w_down = std::cos(kPi / 2.0 * t);
  *w_up = std::sin(kPi / 2.0 * t);
}

void append_segment(std::vector<SegmentLabel>& segs, std::size_t start,
                    std::size_t end, Label label) {
  if (end <= start) return;
  if (!segs.empty() && segs.back().label == label) {
    segs.back().end = end;
    return;
  }
  segs.push_back({start, end, label});
}

}  // namespace

SpliceResult splice(const AudioBuffer& host, const AudioBuffer& insert,
                    const SplicePlan& plan) {
  if (host.sample_rate != insert.sample_rate)
    throw Error(ErrorKind::RateMismatch, "host and insert rates differ");

  const std::size_t len_h = host.samples.size();
  const std::size_t len_b = insert.samples.size();

  std::size_t head_len, tail_start;
  if (plan.mode == SpliceMode::Insert) {
    if (plan.position > len_h)
      throw Error(ErrorKind::BadPosition, "insert position beyond host end");
    head_len = plan.position;
    tail_start = plan.position;
  } else {
    if (plan.position + plan.length > len_h)
      throw Error(ErrorKind::BadPosition, "substitute region beyond host end");
    if (plan.length != len_b)
      throw Error(ErrorKind::BadPosition,
                  "substitute region length must equal insert length");
    head_len = plan.position;
    tail_start = plan.position + plan.length;
  }
  const std::size_t tail_len = len_h - tail_start;

  const std::size_t xfade = static_cast<std::size_t>(
      std::llround(plan.crossfade_ms * host.sample_rate / 1000.0));
  if (xfade > 0 &&
      (2 * xfade > head_len || 2 * xfade > len_b || 2 * xfade > tail_len))
    throw Error(ErrorKind::CrossfadeTooLong,
                "crossfade longer than half of a joined piece");

  const std::size_t out_len = head_len + len_b + tail_len - 2 * xfade;

  SpliceResult r;
  r.audio.sample_rate = host.sample_rate;
  r.audio.samples.resize(out_len);
  double* out = r.audio.samples.data();
  const double* a = host.samples.data();
  const double* b = insert.samples.data();
  const double* c = host.samples.data() + tail_start;

  // head, pure host
  for (std::size_t i = 0; i < head_len - xfade; ++i) out[i] = a[i];
  // join 1: host tail fades out, insert head fades in
  for (std::size_t i = 0; i < xfade; ++i) {
    double wd, wu;
    crossfade_weights(static_cast<int>(xfade), static_cast<int>(i), &wd, &wu);
    out[head_len - xfade + i] = a[head_len - xfade + i] * wd + b[i] * wu;
  }
  // insert body
  for (std::size_t i = 0; i < len_b - 2 * xfade; ++i)
    out[head_len + i] = b[xfade + i];
  // join 2: insert tail fades out, host tail fades in
  const std::size_t j2 = head_len + len_b - 2 * xfade;
  for (std::size_t i = 0; i < xfade; ++i) {
    double wd, wu;
    crossfade_weights(static_cast<int>(xfade), static_cast<int>(i), &wd, &wu);
    out[j2 + i] = b[len_b - xfade + i] * wd + c[i] * wu;
  }
  // tail, pure host
  for (std::size_t i = 0; i < tail_len - xfade; ++i)
    out[j2 + xfade + i] = c[xfade + i];

  // The fake region spans both overlaps and the insert body.
  const std::size_t fake_start = head_len - xfade;
  const std::size_t fake_end = fake_start + len_b;
  append_segment(r.labels, 0, fake_start, Label::Genuine);
  append_segment(r.labels, fake_start, fake_end, Label::Fake);
  append_segment(r.labels, fake_end, out_len, Label::Genuine);
  return r;
}

std::vector<Label> label_to_frames(const std::vector<SegmentLabel>& labels,
                                   const StftConfig& cfg, int sample_rate) {
  if (labels.empty()) throw Error(ErrorKind::GapInLabels, "no segments");
  std::size_t cursor = 0;
  for (const SegmentLabel& s : labels) {
    if (s.start != cursor || s.end <= s.start)
      throw Error(ErrorKind::GapInLabels,
                  "segments must tile the utterance without gaps");
    cursor = s.end;
  }
  const std::size_t total = cursor;

  const std::size_t frame_len =
      static_cast<std::size_t>(cfg.frame_len_samples(sample_rate));
  const std::size_t hop = static_cast<std::size_t>(cfg.hop_samples(sample_rate));
  if (total < frame_len) return {};

  const std::size_t frames = 1 + (total - frame_len) / hop;
  std::vector<Label> out(frames, Label::Genuine);
  for (const SegmentLabel& s : labels) {
    if (s.label != Label::Fake) continue;
    // frames whose span [t*hop, t*hop + frame_len) intersects [s.start, s.end)
    const std::size_t first =
        s.start < frame_len ? 0 : (s.start - frame_len) / hop + 1;
    for (std::size_t t = first; t < frames && t * hop < s.end; ++t)
      out[t] = Label::Fake;
  }
  return out;
}

void save_labels(const std::vector<SegmentLabel>& labels, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot create " + path);
  for (const SegmentLabel& s : labels)
    out << s.start << '\t' << s.end << '\t' << label_name(s.label) << '\n';
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

std::vector<SegmentLabel> load_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::vector<SegmentLabel> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    SegmentLabel s;
    std::string name;
    if (!(ls >> s.start >> s.end >> name))
      throw Error(ErrorKind::IoError, path + ": bad label line: " + line);
    s.label = label_from_name(name);
    labels.push_back(s);
  }
  return labels;
}

}  // namespace spoofkit
