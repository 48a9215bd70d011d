// Copyright (c) 2026 Seqaug Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "seqaug/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "seqaug: deterministic length perturbation and n-best label smoothing "
      "for sequence training data"};
  app.require_subcommand(1);

  seqaug::cli::PerturbOptions perturb;
  CLI::App* perturb_cmd = app.add_subcommand(
      "perturb", "Apply length perturbation to a feature manifest");
  perturb_cmd->add_option("--manifest", perturb.manifest, "Input manifest")
      ->required();
  perturb_cmd->add_option("--out-dir", perturb.out_dir, "Output directory")
      ->required();
  perturb_cmd->add_option("--config", perturb.config, "JSON config file")
      ->required();
  perturb_cmd->add_option("--epoch", perturb.epoch, "Training epoch (1-based)")
      ->required();
  perturb_cmd->add_option("--seed", perturb.seed, "Global seed")->required();
  perturb_cmd->add_option("--threads", perturb.threads, "Worker threads")
      ->default_val(1);

  seqaug::cli::SmoothOptions smooth;
  CLI::App* smooth_cmd = app.add_subcommand(
      "smooth", "Replace transcripts with n-best hypotheses probabilistically");
  smooth_cmd->add_option("--manifest", smooth.manifest, "Input manifest")
      ->required();
  smooth_cmd->add_option("--nbest", smooth.nbest, "N-best hypothesis file")
      ->required();
  smooth_cmd->add_option("--config", smooth.config, "JSON config file")
      ->required();
  smooth_cmd->add_option("--epoch", smooth.epoch, "Training epoch (1-based)")
      ->required();
  smooth_cmd->add_option("--seed", smooth.seed, "Global seed")->required();
  smooth_cmd->add_option("--out", smooth.out, "Output manifest path")
      ->required();
  smooth_cmd->add_option("--threads", smooth.threads, "Worker threads")
      ->default_val(1);

  std::string render_in;
  std::string render_out;
  CLI::App* render_cmd =
      app.add_subcommand("render", "Render a feature file as a PGM image");
  render_cmd->add_option("--in", render_in, "Input FSEQ or CSV file")
      ->required();
  render_cmd->add_option("--out", render_out, "Output PGM path")->required();

  std::string stats_before;
  std::string stats_after;
  CLI::App* stats_cmd = app.add_subcommand(
      "stats", "Report frame-count deltas between two manifests");
  stats_cmd->add_option("--before", stats_before, "Manifest before")
      ->required();
  stats_cmd->add_option("--after", stats_after, "Manifest after")->required();

  std::size_t sim_seeds = 10;
  int sim_epochs = 0;
  CLI::App* sim_cmd = app.add_subcommand(
      "simulate", "Train/test length-mismatch demo on a synthetic task");
  sim_cmd->add_option("--seeds", sim_seeds, "Number of independent seeds")
      ->default_val(10);
  sim_cmd->add_option("--epochs", sim_epochs,
                      "Training epochs (0 = built-in default)");

  std::size_t selftest_trials = 100000;
  std::uint64_t selftest_seed = 20260810;
  CLI::App* selftest_cmd = app.add_subcommand(
      "selftest", "Verify empirical gate and replacement rates");
  selftest_cmd->add_option("--trials", selftest_trials, "Trials per rate")
      ->default_val(100000);
  selftest_cmd->add_option("--seed", selftest_seed, "Verification seed")
      ->default_val(20260810);

  CLI11_PARSE(app, argc, argv);

  if (perturb_cmd->parsed()) {
    return seqaug::cli::run_perturb(perturb, std::cout, std::cerr);
  }
  if (smooth_cmd->parsed()) {
    return seqaug::cli::run_smooth(smooth, std::cout, std::cerr);
  }
  if (render_cmd->parsed()) {
    return seqaug::cli::run_render(render_in, render_out, std::cerr);
  }
  if (stats_cmd->parsed()) {
    return seqaug::cli::run_stats(stats_before, stats_after, std::cout,
                                  std::cerr);
  }
  if (sim_cmd->parsed()) {
    return seqaug::cli::run_simulate(sim_seeds, sim_epochs, std::cout,
                                     std::cerr);
  }
  if (selftest_cmd->parsed()) {
    return seqaug::cli::run_selftest(selftest_trials, selftest_seed, std::cout,
                                     std::cerr);
  }
  return seqaug::cli::kExitRuntime;
}
