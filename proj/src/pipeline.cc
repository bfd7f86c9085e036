// src/pipeline.cc

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

#include "spoofkit/pipeline.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spoofkit/error.h"
#include "spoofkit/rng.h"
#include "spoofkit/scorer.h"

namespace spoofkit {

namespace fs = std::filesystem;

namespace {

int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::string trim_ws(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_int(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadConfig, key + ": not an integer: " + v);
  }
}

double parse_double(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadConfig, key + ": not a number: " + v);
  }
}

std::uint64_t parse_u64(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const std::uint64_t x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadConfig, key + ": not an unsigned integer: " + v);
  }
}

std::string format_param(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string file_stem(const std::string& path) {
  return fs::path(path).stem().string();
}

// Sorted (stem, path) listing of the WAV files under dir.
std::vector<std::pair<std::string, std::string>> list_wavs(const std::string& dir,
                                                           const std::string& what) {
  if (dir.empty())
    throw Error(ErrorKind::BadConfig, what + " directory not configured");
  if (!fs::is_directory(dir))
    throw Error(ErrorKind::BadConfig, what + " directory missing: " + dir);
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".wav")
      out.emplace_back(entry.path().stem().string(), entry.path().string());
  std::sort(out.begin(), out.end());
  if (out.empty())
    throw Error(ErrorKind::BadConfig, what + " directory has no .wav files: " + dir);
  return out;
}

AudioBuffer load_input(const PipelineConfig& cfg, const std::string& path) {
  AudioBuffer audio = load_wav(path, cfg.sample_rate);
  switch (cfg.trim) {
    case PipelineConfig::Trim::None:
      return audio;
    case PipelineConfig::Trim::Fixed:
      return trim_or_pad(audio, TrimMode::fixed_seconds(cfg.trim_seconds));
    case PipelineConfig::Trim::Cap:
      return trim_or_pad(audio, TrimMode::cap_seconds(cfg.trim_seconds));
  }
  return audio;
}

// Per-file worker results, flushed to the log in manifest order.
struct FileOutcome {
  bool ok = false;
  std::string line;
};

CommandStats flush_outcomes(const std::vector<FileOutcome>& outcomes,
                            std::ostream& log) {
  CommandStats stats;
  for (const FileOutcome& o : outcomes) {
    if (!o.line.empty()) log << o.line << '\n';
    ++stats.processed;
    if (!o.ok) ++stats.failed;
  }
  return stats;
}

}  // namespace

PipelineConfig parse_config_text(const std::string& text) {
  PipelineConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim_ws(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::BadConfig,
                  "line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim_ws(line.substr(0, eq));
    const std::string value = trim_ws(line.substr(eq + 1));

    if (key == "sample_rate") {
      cfg.sample_rate = parse_int(value, key);
      if (cfg.sample_rate <= 0)
        throw Error(ErrorKind::BadConfig, "sample_rate must be positive");
    } else if (key == "feature") {
      cfg.feature = feature_kind_from_name(value);
    } else if (key == "frame_ms") {
      cfg.stft.frame_len_ms = parse_double(value, key);
    } else if (key == "hop_ms") {
      cfg.stft.hop_ms = parse_double(value, key);
      cfg.cqt.hop_ms = cfg.stft.hop_ms;
    } else if (key == "fft_size") {
      cfg.stft.fft_size = parse_int(value, key);
    } else if (key == "window") {
      if (value == "hamming")
        cfg.stft.window = WindowKind::Hamming;
      else if (value == "hanning")
        cfg.stft.window = WindowKind::Hanning;
      else
        throw Error(ErrorKind::BadConfig, "window must be hamming or hanning");
    } else if (key == "n_mels") {
      cfg.n_mels = parse_int(value, key);
    } else if (key == "n_mfcc") {
      cfg.n_mfcc = parse_int(value, key);
    } else if (key == "mel_fmin") {
      cfg.mel_fmin = parse_double(value, key);
    } else if (key == "mel_fmax") {
      cfg.mel_fmax = parse_double(value, key);
    } else if (key == "cqt_fmin") {
      cfg.cqt.fmin = parse_double(value, key);
    } else if (key == "cqt_bins") {
      cfg.cqt.n_bins = parse_int(value, key);
    } else if (key == "cqt_bins_per_octave") {
      cfg.cqt.bins_per_octave = parse_int(value, key);
    } else if (key == "mrp_base_freq") {
      cfg.mrp_base_freq = parse_double(value, key);
    } else if (key == "mrp_n_mels") {
      cfg.mrp_n_mels = parse_int(value, key);
    } else if (key == "trim") {
      if (value == "none") {
        cfg.trim = PipelineConfig::Trim::None;
      } else if (value.rfind("fixed:", 0) == 0) {
        cfg.trim = PipelineConfig::Trim::Fixed;
        cfg.trim_seconds = parse_double(value.substr(6), key);
      } else if (value.rfind("cap:", 0) == 0) {
        cfg.trim = PipelineConfig::Trim::Cap;
        cfg.trim_seconds = parse_double(value.substr(4), key);
      } else {
        throw Error(ErrorKind::BadConfig,
                    "trim must be none, fixed:<s> or cap:<s>, got " + value);
      }
      if (cfg.trim != PipelineConfig::Trim::None && cfg.trim_seconds <= 0.0)
        throw Error(ErrorKind::BadConfig, "trim seconds must be positive");
    } else if (key == "augment") {
      cfg.augment_kinds.clear();
      std::istringstream ls(value);
      std::string item;
      while (std::getline(ls, item, ','))
        cfg.augment_kinds.push_back(augment_kind_from_name(trim_ws(item)));
    } else if (key == "snr_noise_min") {
      cfg.snr_noise_min = parse_double(value, key);
    } else if (key == "snr_noise_max") {
      cfg.snr_noise_max = parse_double(value, key);
    } else if (key == "snr_white_min") {
      cfg.snr_white_min = parse_double(value, key);
    } else if (key == "snr_white_max") {
      cfg.snr_white_max = parse_double(value, key);
    } else if (key == "fade_in_frac") {
      cfg.fade_in_frac = parse_double(value, key);
    } else if (key == "fade_out_frac") {
      cfg.fade_out_frac = parse_double(value, key);
    } else if (key == "splice_mode") {
      if (value == "insert")
        cfg.splice_mode = SpliceMode::Insert;
      else if (value == "substitute")
        cfg.splice_mode = SpliceMode::Substitute;
      else
        throw Error(ErrorKind::BadConfig, "splice_mode must be insert or substitute");
    } else if (key == "crossfade_ms") {
      cfg.crossfade_ms = parse_double(value, key);
      if (cfg.crossfade_ms < 0.0)
        throw Error(ErrorKind::BadConfig, "crossfade_ms must be >= 0");
    } else if (key == "noise_dir") {
      cfg.noise_dir = value;
    } else if (key == "music_dir") {
      cfg.music_dir = value;
    } else if (key == "rir_dir") {
      cfg.rir_dir = value;
    } else if (key == "seed") {
      cfg.seed = parse_u64(value, key);
    } else {
      throw Error(ErrorKind::BadConfig, "unknown config key: " + key);
    }
  }

  if (cfg.fade_in_frac < 0.0 || cfg.fade_out_frac < 0.0 ||
      cfg.fade_in_frac + cfg.fade_out_frac > 1.0)
    throw Error(ErrorKind::BadConfig, "fade fractions must be >= 0 and sum <= 1");
  if (cfg.snr_noise_min > cfg.snr_noise_max || cfg.snr_white_min > cfg.snr_white_max)
    throw Error(ErrorKind::BadConfig, "SNR range min exceeds max");
  return cfg;
}

PipelineConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open config " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open manifest " + path);
  Manifest m;
  std::string line;
  while (std::getline(in, line)) {
    line = trim_ws(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string id, file;
    if (!(ls >> id >> file))
      throw Error(ErrorKind::IoError, path + ": manifest line needs id and path: " + line);
    m.emplace_back(id, file);
  }
  return m;
}

void save_manifest(const Manifest& manifest, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot create " + path);
  for (const auto& [id, file] : manifest) out << id << '\t' << file << '\n';
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path);
}

CommandStats cmd_extract(const PipelineConfig& cfg, const Manifest& manifest,
                         const std::string& out_dir, int jobs, std::ostream& log) {
  fs::create_directories(out_dir);

  // Shared immutable state built once per run.
  MelFilterbank mel;
  if (cfg.feature == FeatureKind::LogFbank || cfg.feature == FeatureKind::Mfcc) {
    const double fmax = cfg.mel_fmax > 0.0 ? cfg.mel_fmax : cfg.sample_rate / 2.0;
    mel = mel_matrix(cfg.n_mels, cfg.mel_fmin, fmax, cfg.stft.fft_size,
                     cfg.sample_rate);
  }
  CqtKernels kernels;
  if (cfg.feature == FeatureKind::LogCqt)
    kernels = make_cqt_kernels(cfg.cqt, cfg.sample_rate);

  std::vector<FileOutcome> outcomes(manifest.size());
  const int nt = effective_jobs(jobs);

#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(manifest.size()); ++i) {
    const auto& [id, path] = manifest[i];
    try {
      const AudioBuffer audio = load_input(cfg, path);
      FeatureMatrix f;
      switch (cfg.feature) {
        case FeatureKind::LogMag:
          f = log_magnitude(stft(audio, cfg.stft));
          f.config_digest = stft_feature_digest(FeatureKind::LogMag, cfg.stft,
                                                cfg.sample_rate, f.dims);
          break;
        case FeatureKind::Phase:
          f = phase(stft(audio, cfg.stft));
          f.config_digest = stft_feature_digest(FeatureKind::Phase, cfg.stft,
                                                cfg.sample_rate, f.dims);
          break;
        case FeatureKind::LogFbank:
          f = log_fbank(audio, cfg.stft, mel);
          break;
        case FeatureKind::Mfcc:
          f = mfcc(audio, cfg.stft, mel, cfg.n_mfcc);
          break;
        case FeatureKind::LogCqt:
          f = log_cqt(audio, kernels);
          break;
        case FeatureKind::Mrp: {
          MrpConfig mc{cfg.mrp_base_freq, cfg.mrp_n_mels, cfg.stft};
          f = mrp(audio, mc);
          break;
        }
      }
      dump_features(f, (fs::path(out_dir) / (id + ".adsf")).string());
      outcomes[i] = {true, id + "\t" + std::to_string(f.frames) + "x" +
                               std::to_string(f.dims)};
    } catch (const std::exception& e) {
      outcomes[i] = {false, "[fail] " + id + ": " + e.what()};
    }
  }
  return flush_outcomes(outcomes, log);
}

CommandStats cmd_augment(const PipelineConfig& cfg, const Manifest& manifest,
                         const std::string& out_dir, int jobs, std::ostream& log) {
  if (cfg.augment_kinds.empty())
    throw Error(ErrorKind::BadConfig, "no augment kinds configured");
  fs::create_directories(out_dir);

  const bool needs_noise =
      std::count(cfg.augment_kinds.begin(), cfg.augment_kinds.end(),
                 AugmentSpec::Kind::Noise) > 0;
  const bool needs_music =
      std::count(cfg.augment_kinds.begin(), cfg.augment_kinds.end(),
                 AugmentSpec::Kind::Music) > 0;
  const bool needs_rir =
      std::count(cfg.augment_kinds.begin(), cfg.augment_kinds.end(),
                 AugmentSpec::Kind::Reverb) > 0;

  std::vector<std::pair<std::string, std::string>> noise_files, music_files, rir_files;
  if (needs_noise) noise_files = list_wavs(cfg.noise_dir, "noise");
  if (needs_music) music_files = list_wavs(cfg.music_dir, "music");
  if (needs_rir) rir_files = list_wavs(cfg.rir_dir, "rir");

  struct Job {
    std::size_t input;
    AugmentSpec::Kind kind;
  };
  std::vector<Job> plan;
  for (std::size_t i = 0; i < manifest.size(); ++i)
    for (AugmentSpec::Kind kind : cfg.augment_kinds) plan.push_back({i, kind});

  struct Row {
    FileOutcome outcome;
    std::string manifest_line;
  };
  std::vector<Row> rows(plan.size());
  const int nt = effective_jobs(jobs);

#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(plan.size()); ++j) {
    const auto& [idx, kind] = plan[j];
    const auto& [id, path] = manifest[idx];
    const std::string out_id = id + "_" + augment_kind_name(kind);
    try {
      const AudioBuffer signal = load_wav(path, cfg.sample_rate);
      Rng rng(cfg.seed ^ fnv1a(out_id));
      AudioBuffer out;
      std::string param;
      switch (kind) {
        case AugmentSpec::Kind::Noise:
        case AugmentSpec::Kind::Music: {
          const auto& files =
              kind == AugmentSpec::Kind::Noise ? noise_files : music_files;
          const auto& [stem, file] = files[rng.index(files.size())];
          const double snr = rng.uniform(cfg.snr_noise_min, cfg.snr_noise_max);
          const AudioBuffer noise = load_wav(file, cfg.sample_rate);
          out = mix_at_snr(signal, noise, snr, rng.next_u64());
          param = format_param(snr);
          break;
        }
        case AugmentSpec::Kind::WhiteNoise: {
          const double snr = rng.uniform(cfg.snr_white_min, cfg.snr_white_max);
          out = white_noise_at_snr(signal, snr, rng.next_u64());
          param = format_param(snr);
          break;
        }
        case AugmentSpec::Kind::Reverb: {
          const auto& [stem, file] = rir_files[rng.index(rir_files.size())];
          out = convolve_rir(signal, load_wav(file, cfg.sample_rate));
          param = stem;
          break;
        }
        case AugmentSpec::Kind::Fade: {
          out = fade(signal, cfg.fade_in_frac, cfg.fade_out_frac);
          char buf[64];
          std::snprintf(buf, sizeof(buf), "%g,%g", cfg.fade_in_frac,
                        cfg.fade_out_frac);
          param = buf;
          break;
        }
      }
      save_wav(out, (fs::path(out_dir) / (out_id + ".wav")).string());
      rows[j].outcome = {true, ""};
      rows[j].manifest_line = out_id + "\t" + id + "\t" + augment_kind_name(kind) +
                              "\t" + param;
    } catch (const std::exception& e) {
      rows[j].outcome = {false, "[fail] " + out_id + ": " + e.what()};
    }
  }

  std::ofstream mf(fs::path(out_dir) / "augment_manifest.tsv");
  if (!mf) throw Error(ErrorKind::IoError, "cannot create augment manifest");
  CommandStats stats;
  for (const Row& r : rows) {
    if (!r.outcome.line.empty()) log << r.outcome.line << '\n';
    if (r.outcome.ok) mf << r.manifest_line << '\n';
    ++stats.processed;
    if (!r.outcome.ok) ++stats.failed;
  }
  return stats;
}

CommandStats cmd_pfgen(const PipelineConfig& cfg, const Manifest& hosts,
                       const Manifest& inserts, const std::string& out_dir,
                       int jobs, std::ostream& log) {
  if (inserts.empty())
    throw Error(ErrorKind::BadConfig, "insert manifest is empty");
  fs::create_directories(out_dir);

  struct Row {
    FileOutcome outcome;
    std::string manifest_line;
  };
  std::vector<Row> rows(hosts.size());
  const int nt = effective_jobs(jobs);

#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(hosts.size()); ++i) {
    const auto& [id, path] = hosts[i];
    const std::string out_id = id + "_pf";
    try {
      const AudioBuffer host = load_wav(path, cfg.sample_rate);
      Rng rng(cfg.seed ^ fnv1a(out_id));
      const auto& [ins_id, ins_path] = inserts[rng.index(inserts.size())];
      const AudioBuffer insert = load_wav(ins_path, cfg.sample_rate);

      const std::size_t xfade = static_cast<std::size_t>(
          std::llround(cfg.crossfade_ms * cfg.sample_rate / 1000.0));
      const std::size_t len_h = host.samples.size();
      const std::size_t len_b = insert.samples.size();

      SplicePlan plan;
      plan.mode = cfg.splice_mode;
      plan.crossfade_ms = cfg.crossfade_ms;
      if (cfg.splice_mode == SpliceMode::Insert) {
        if (len_h < 4 * xfade || len_b < 2 * xfade)
          throw Error(ErrorKind::CrossfadeTooLong, "host or insert too short");
        plan.position = 2 * xfade + rng.index(len_h - 4 * xfade + 1);
      } else {
        plan.length = len_b;
        if (len_b < 2 * xfade || len_h < len_b + 4 * xfade)
          throw Error(ErrorKind::CrossfadeTooLong, "host too short to substitute");
        plan.position = 2 * xfade + rng.index(len_h - len_b - 4 * xfade + 1);
      }

      const SpliceResult r = splice(host, insert, plan);
      save_wav(r.audio, (fs::path(out_dir) / (out_id + ".wav")).string());
      save_labels(r.labels, (fs::path(out_dir) / (out_id + ".lab")).string());

      std::ostringstream line;
      line << out_id << '\t' << id << '\t' << ins_id << '\t'
           << (plan.mode == SpliceMode::Insert ? "insert" : "substitute") << '\t'
           << plan.position << '\t' << plan.length << '\t' << cfg.crossfade_ms;
      rows[i].outcome = {true, ""};
      rows[i].manifest_line = line.str();
    } catch (const std::exception& e) {
      rows[i].outcome = {false, "[fail] " + out_id + ": " + e.what()};
    }
  }

  std::ofstream mf(fs::path(out_dir) / "pf_manifest.tsv");
  if (!mf) throw Error(ErrorKind::IoError, "cannot create pf manifest");
  CommandStats stats;
  for (const Row& r : rows) {
    if (!r.outcome.line.empty()) log << r.outcome.line << '\n';
    if (r.outcome.ok) mf << r.manifest_line << '\n';
    ++stats.processed;
    if (!r.outcome.ok) ++stats.failed;
  }
  return stats;
}

CommandStats cmd_train(const Manifest& features, const TrialKey& key,
                       const std::string& model_path, std::ostream& log) {
  CommandStats stats;
  std::vector<UttEmbedding> embeddings;
  std::vector<Label> labels;
  FeatureKind kind = FeatureKind::LogFbank;
  bool have_kind = false;

  for (const auto& [id, path] : features) {
    ++stats.processed;
    try {
      const auto it = key.find(id);
      if (it == key.end())
        throw Error(ErrorKind::MissingScore, "no label in key for " + id);
      const FeatureMatrix f = load_features(path);
      if (have_kind && f.kind != kind)
        throw Error(ErrorKind::ShapeMismatch, "mixed feature kinds in training set");
      kind = f.kind;
      have_kind = true;
      embeddings.push_back(pool(f));
      labels.push_back(it->second);
    } catch (const std::exception& e) {
      log << "[fail] " << id << ": " << e.what() << '\n';
      ++stats.failed;
    }
  }

  GaussianScorer scorer = fit(embeddings, labels);
  scorer.feature_kind = kind;
  save_scorer(scorer, model_path);
  return stats;
}

CommandStats cmd_score(const std::string& model_path, const Manifest& features,
                       const std::string& score_path, int jobs, std::ostream& log) {
  const GaussianScorer scorer = load_scorer(model_path);

  struct Slot {
    FileOutcome outcome;
    double value = 0.0;
  };
  std::vector<Slot> slots(features.size());
  const int nt = effective_jobs(jobs);

#pragma omp parallel for schedule(dynamic) num_threads(nt)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(features.size()); ++i) {
    const auto& [id, path] = features[i];
    try {
      const FeatureMatrix f = load_features(path);
      if (f.kind != scorer.feature_kind)
        throw Error(ErrorKind::ShapeMismatch,
                    std::string("feature kind ") + feature_kind_name(f.kind) +
                        " does not match model " +
                        feature_kind_name(scorer.feature_kind));
      slots[i].value = score(scorer, pool(f));
      slots[i].outcome.ok = true;
    } catch (const std::exception& e) {
      slots[i].outcome = {false, "[fail] " + id + ": " + e.what()};
    }
  }

  ScoreSet scores;
  CommandStats stats;
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (!slots[i].outcome.line.empty()) log << slots[i].outcome.line << '\n';
    if (slots[i].outcome.ok) scores[features[i].first] = slots[i].value;
    ++stats.processed;
    if (!slots[i].outcome.ok) ++stats.failed;
  }
  save_scores(scores, score_path);
  return stats;
}

EerResult cmd_eval(const std::string& score_path, const std::string& key_path) {
  return compute_eer(load_scores(score_path), load_key(key_path));
}

FusionResult cmd_fuse(const std::vector<std::string>& score_paths,
                      const std::string& key_path, double mu, bool apply_znorm,
                      const std::string& report_path) {
  if (score_paths.empty())
    throw Error(ErrorKind::EmptySet, "no score files given");

  const TrialKey key = load_key(key_path);
  std::vector<Subsystem> subsystems;
  for (const std::string& path : score_paths) {
    Subsystem s;
    s.id = file_stem(path);
    s.scores_dev = load_scores(path);
    if (apply_znorm) s.scores_dev = znorm(s.scores_dev);
    subsystems.push_back(std::move(s));
  }

  FusionResult result = greedy_fuse(subsystems, key, mu);
  if (!report_path.empty()) save_fusion_report(result, report_path);
  return result;
}

}  // namespace spoofkit
