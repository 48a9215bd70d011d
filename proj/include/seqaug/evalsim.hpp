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

#ifndef SEQAUG_EVALSIM_HPP
#define SEQAUG_EVALSIM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqaug/types.hpp"

namespace seqaug::evalsim {

/// Synthetic two-class task with a train/test length mismatch. Each class is
/// a fixed low-frequency temporal pattern (class-specific offset, amplitude
/// and phase per dimension, shared sinusoid period in absolute frames) plus
/// i.i.d. Gaussian frame noise. Because the pattern is anchored in absolute
/// time, mean-pooled features shift systematically when the pooling window
/// (the utterance length) changes, which is what the demo exercises.
struct TaskConfig {
  int feature_dim = 8;
  int train_frames = 40;
  int test_frames = 120;
  int per_class_train = 200;
  int per_class_test = 200;
  double noise_scale = 0.55;
  double pattern_period = 64.0;  // sinusoid period in frames
  double pattern_amp = 1.1;      // per-dimension amplitude scale
  double class_sep = 0.25;       // scale of the static class offsets
};

struct SyntheticTask {
  TaskConfig config;
  std::vector<Utterance> train;
  std::vector<Utterance> test;
};

/// Class index of a generated utterance (0 or 1, from its label token).
int class_of(const Utterance& u);

/// Deterministic in (cfg, seed); per-utterance streams are derived from the
/// utterance id, so regenerating any subset reproduces the same data.
SyntheticTask generate_task(const TaskConfig& cfg, std::uint64_t seed);

/// Mean over time of each feature dimension, as doubles.
std::vector<double> mean_pool(const FeatureSequence& seq);

/// Two-class logistic regression on mean-pooled features, trained by
/// full-batch gradient descent with a fixed step size.
struct ModelRecord {
  std::vector<double> weights;  // feature_dim entries + trailing bias
  std::vector<double> loss_trace;
};

struct TrainOptions {
  int epochs = 300;
  double step_size = 0.5;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mean logistic loss and its gradient at `weights` over pooled examples.
/// Exposed so tests can check the gradient against finite differences.
double loss_and_gradient(std::span<const double> weights,
                         std::span<const std::vector<double>> pooled,
                         std::span<const int> classes,
                         std::span<double> gradient);

/// Trains on task.train. When `lp_cfg` is given, every epoch perturbs each
/// training utterance through its own (seed, id, epoch) stream before
/// pooling; evaluation data is never perturbed. Throws TrainingError if the
/// loss turns non-finite.
ModelRecord train_classifier(const SyntheticTask& task,
                             const std::optional<LengthPerturbConfig>& lp_cfg,
                             const TrainOptions& options, std::uint64_t seed);

/// Fraction of utterances whose predicted class matches.
double evaluate(const ModelRecord& model, std::span<const Utterance> split);

/// One baseline-vs-augmented comparison on a fresh task.
struct SeedOutcome {
  std::uint64_t seed = 0;
  double baseline_accuracy = 0.0;
  double augmented_accuracy = 0.0;
  bool augmented_wins = false;  // augmented >= baseline
};

struct SimulationResult {
  std::vector<SeedOutcome> outcomes;
  std::size_t wins = 0;
};

/// Runs `n_seeds` independent tasks (seeds 1..n) with and without the given
/// perturbation config and counts how often augmentation is at least as good
/// on the mismatched test split.
SimulationResult run_simulation(std::size_t n_seeds, const TaskConfig& cfg,
                                const LengthPerturbConfig& lp_cfg,
                                const TrainOptions& options);

}  // namespace seqaug::evalsim

#endif  // SEQAUG_EVALSIM_HPP
