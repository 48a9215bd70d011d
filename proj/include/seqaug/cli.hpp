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

#ifndef SEQAUG_CLI_HPP
#define SEQAUG_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "seqaug/schedule.hpp"
#include "seqaug/types.hpp"

namespace seqaug::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;  // I/O, parse or data errors
inline constexpr int kExitConfig = 2;   // configuration rejected

/// Everything a run needs: perturbation and smoothing parameters plus the
/// epoch windows. Loaded from a JSON file that may name a preset and/or
/// override whole sections (see README for the schema).
struct ToolConfig {
  LengthPerturbConfig lenperturb;
  SmoothingConfig smoothing;
  ScheduleSpec schedule;
};

ToolConfig load_config(const std::filesystem::path& path);

struct PerturbOptions {
  std::filesystem::path manifest;
  std::filesystem::path out_dir;
  std::filesystem::path config;
  int epoch = 1;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Applies length perturbation (if scheduled for the epoch) to every
/// utterance in the manifest; writes one FSEQ per utterance plus
/// manifest.tsv into out_dir. Label smoothing never runs here.
int run_perturb(const PerturbOptions& options, std::ostream& out,
                std::ostream& err);

struct SmoothOptions {
  std::filesystem::path manifest;
  std::filesystem::path nbest;
  std::filesystem::path config;
  std::filesystem::path out;
  int epoch = 1;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// Rewrites manifest transcripts via n-best replacement (if scheduled for
/// the epoch); feature files are untouched and their paths pass through.
/// Prints `replaced=<n> kept=<n> missing_nbest=<n>`.
int run_smooth(const SmoothOptions& options, std::ostream& out,
               std::ostream& err);

int run_render(const std::filesystem::path& input,
               const std::filesystem::path& output, std::ostream& err);

int run_stats(const std::filesystem::path& before_manifest,
              const std::filesystem::path& after_manifest, std::ostream& out,
              std::ostream& err);

int run_simulate(std::size_t seeds, int epochs, std::ostream& out,
                 std::ostream& err);

int run_selftest(std::size_t trials, std::uint64_t seed, std::ostream& out,
                 std::ostream& err);

}  // namespace seqaug::cli

#endif  // SEQAUG_CLI_HPP
