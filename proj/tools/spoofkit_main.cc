// tools/spoofkit_main.cc

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

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spoofkit/error.h"
#include "spoofkit/pipeline.h"

namespace {

using namespace spoofkit;

PipelineConfig load_config(const std::string& config_path,
                           std::optional<std::uint64_t> seed_override) {
  PipelineConfig cfg =
      config_path.empty() ? PipelineConfig{} : parse_config_file(config_path);
  if (seed_override) cfg.seed = *seed_override;
  return cfg;
}

int exit_code(const CommandStats& stats) { return stats.failed == 0 ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spoofkit - spoofed-speech detection pipeline toolkit"};
  app.require_subcommand(1);

  std::string config_path, manifest_path, out_dir, key_path, model_path;
  std::string insert_manifest_path, score_path, report_path;
  std::vector<std::string> score_paths;
  int jobs = 0;
  std::optional<std::uint64_t> seed;
  double mu = 0.9;
  bool apply_znorm = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "pipeline config file");
    cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    cmd->add_option("--seed", seed, "override the config seed");
  };

  CLI::App* extract = app.add_subcommand("extract", "extract features to ADSF files");
  add_common(extract);
  extract->add_option("--manifest", manifest_path, "utt_id<TAB>wav_path lines")
      ->required();
  extract->add_option("--out", out_dir, "output directory")->required();

  CLI::App* augment = app.add_subcommand("augment", "write augmented copies");
  add_common(augment);
  augment->add_option("--manifest", manifest_path)->required();
  augment->add_option("--out", out_dir)->required();

  CLI::App* pfgen = app.add_subcommand("pfgen", "forge partially-fake utterances");
  add_common(pfgen);
  pfgen->add_option("--manifest", manifest_path, "host manifest")->required();
  pfgen->add_option("--inserts", insert_manifest_path, "insert manifest")->required();
  pfgen->add_option("--out", out_dir)->required();

  CLI::App* train = app.add_subcommand("train", "fit the Gaussian scorer");
  add_common(train);
  train->add_option("--manifest", manifest_path, "utt_id<TAB>adsf_path lines")
      ->required();
  train->add_option("--key", key_path, "utt_id<TAB>genuine|fake lines")->required();
  train->add_option("--model", model_path, "output model file")->required();

  CLI::App* score_cmd = app.add_subcommand("score", "score features with a model");
  add_common(score_cmd);
  score_cmd->add_option("--manifest", manifest_path)->required();
  score_cmd->add_option("--model", model_path)->required();
  score_cmd->add_option("--out", score_path, "output score file")->required();

  CLI::App* eval = app.add_subcommand("eval", "report EER of a score file");
  eval->add_option("--scores", score_path)->required();
  eval->add_option("--key", key_path)->required();

  CLI::App* fuse = app.add_subcommand("fuse", "greedy score-level fusion");
  fuse->add_option("--scores", score_paths, "score files, one per subsystem")
      ->required()
      ->expected(-1);
  fuse->add_option("--key", key_path)->required();
  fuse->add_option("--mu", mu, "importance factor (default 0.9)");
  fuse->add_flag("--znorm", apply_znorm, "z-normalize each subsystem first");
  fuse->add_option("--out", report_path, "fusion report file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (extract->parsed()) {
      const PipelineConfig cfg = load_config(config_path, seed);
      return exit_code(
          cmd_extract(cfg, load_manifest(manifest_path), out_dir, jobs, std::cout));
    }
    if (augment->parsed()) {
      const PipelineConfig cfg = load_config(config_path, seed);
      return exit_code(
          cmd_augment(cfg, load_manifest(manifest_path), out_dir, jobs, std::cout));
    }
    if (pfgen->parsed()) {
      const PipelineConfig cfg = load_config(config_path, seed);
      return exit_code(cmd_pfgen(cfg, load_manifest(manifest_path),
                                 load_manifest(insert_manifest_path), out_dir, jobs,
                                 std::cout));
    }
    if (train->parsed()) {
      return exit_code(cmd_train(load_manifest(manifest_path), load_key(key_path),
                                 model_path, std::cout));
    }
    if (score_cmd->parsed()) {
      return exit_code(cmd_score(model_path, load_manifest(manifest_path),
                                 score_path, jobs, std::cout));
    }
    if (eval->parsed()) {
      const EerResult r = cmd_eval(score_path, key_path);
      std::printf("EER %.2f%% threshold %.6g\n", 100.0 * r.eer, r.threshold);
      return 0;
    }
    if (fuse->parsed()) {
      const FusionResult r =
          cmd_fuse(score_paths, key_path, mu, apply_znorm, report_path);
      std::fputs(fusion_report(r).c_str(), stdout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
