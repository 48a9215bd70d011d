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

#include "seqaug/evalsim.hpp"

#include <cmath>
#include <numbers>

#include "seqaug/lenperturb.hpp"
#include "seqaug/random.hpp"

namespace seqaug::evalsim {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

/// Standard normal via Box-Muller; consumes exactly two unit-real draws.
double gaussian(RandomStream& rng) {
  const double u1 = 1.0 - rng.next_unit_real();  // (0, 1], keeps log finite
  const double u2 = rng.next_unit_real();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTau * u2);
}

/// Static per-class offset for one feature dimension.
double class_offset(int cls, int d, const TaskConfig& cfg) {
  const double angle = kTau * (d + 1) / static_cast<double>(cfg.feature_dim);
  return cfg.class_sep * (cls == 0 ? std::cos(angle) : std::sin(angle));
}

/// Per-class pattern amplitude for one dimension; signs alternate differently
/// between the classes so the pooled pattern residues are not collinear.
double pattern_amp(int cls, int d, const TaskConfig& cfg) {
  if (cls == 0) {
    return cfg.pattern_amp * ((d % 2 == 0) ? 1.0 : 0.5);
  }
  return cfg.pattern_amp * ((d % 2 == 0) ? -0.5 : 1.0);
}

double pattern_phase(int cls) {
  return cls == 0 ? 0.0 : std::numbers::pi / 3.0;
}

FeatureSequence generate_sequence(int cls, int frames, const TaskConfig& cfg,
                                  RandomStream& rng) {
  const int dim = cfg.feature_dim;
  std::vector<float> values;
  values.reserve(static_cast<std::size_t>(frames) * dim);
  for (int t = 0; t < frames; ++t) {
    const double wave_arg = kTau * t / cfg.pattern_period + pattern_phase(cls);
    for (int d = 0; d < dim; ++d) {
      const double clean =
          class_offset(cls, d, cfg) + pattern_amp(cls, d, cfg) * std::sin(wave_arg);
      const double noisy =
          cfg.noise_scale > 0.0 ? clean + cfg.noise_scale * gaussian(rng) : clean;
      values.push_back(static_cast<float>(noisy));
    }
  }
  return FeatureSequence(std::move(values), static_cast<std::size_t>(frames),
                         static_cast<std::size_t>(dim));
}

std::vector<Utterance> generate_split(const char* split_name, int per_class,
                                      int frames, const TaskConfig& cfg,
                                      std::uint64_t seed) {
  std::vector<Utterance> out;
  out.reserve(static_cast<std::size_t>(per_class) * 2);
  for (int i = 0; i < per_class * 2; ++i) {
    const int cls = i % 2;
    const std::string id =
        std::string(split_name) + "-" + std::to_string(i);
    RandomStream rng = derive_stream(seed, id, 0);
    out.emplace_back(id, generate_sequence(cls, frames, cfg, rng),
                     std::vector<std::string>{cls == 0 ? "c0" : "c1"});
  }
  return out;
}

double sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double dot_with_bias(std::span<const double> weights,
                     const std::vector<double>& pooled) {
  double z = weights.back();
  for (std::size_t d = 0; d < pooled.size(); ++d) {
    z += weights[d] * pooled[d];
  }
  return z;
}

}  // namespace

int class_of(const Utterance& u) {
  return (!u.labels.empty() && u.labels[0] == "c1") ? 1 : 0;
}

SyntheticTask generate_task(const TaskConfig& cfg, std::uint64_t seed) {
  if (cfg.feature_dim < 2 || cfg.per_class_train < 2 || cfg.per_class_test < 2) {
    throw std::invalid_argument("generate_task: degenerate task config");
  }
  if (cfg.train_frames < 1 || cfg.test_frames < 1) {
    throw std::invalid_argument("generate_task: lengths must be >= 1");
  }
  SyntheticTask task;
  task.config = cfg;
  task.train =
      generate_split("train", cfg.per_class_train, cfg.train_frames, cfg, seed);
  task.test =
      generate_split("test", cfg.per_class_test, cfg.test_frames, cfg, seed);
  return task;
}

std::vector<double> mean_pool(const FeatureSequence& seq) {
  std::vector<double> pooled(seq.dim(), 0.0);
  for (std::size_t t = 0; t < seq.frames(); ++t) {
    const auto row = seq.frame(t);
    for (std::size_t d = 0; d < pooled.size(); ++d) {
      pooled[d] += row[d];
    }
  }
  const double scale = 1.0 / static_cast<double>(seq.frames());
  for (double& v : pooled) {
    v *= scale;
  }
  return pooled;
}

double loss_and_gradient(std::span<const double> weights,
                         std::span<const std::vector<double>> pooled,
                         std::span<const int> classes,
                         std::span<double> gradient) {
  const std::size_t n = pooled.size();
  std::fill(gradient.begin(), gradient.end(), 0.0);
  double loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = dot_with_bias(weights, pooled[i]);
    const double y = static_cast<double>(classes[i]);
    // log(1 + exp(-m)) with m = z for y=1, -z for y=0, computed stably.
    const double margin = (y > 0.5) ? z : -z;
    loss += margin > 0.0 ? std::log1p(std::exp(-margin))
                         : -margin + std::log1p(std::exp(margin));
    const double residual = sigmoid(z) - y;
    for (std::size_t d = 0; d < pooled[i].size(); ++d) {
      gradient[d] += residual * pooled[i][d];
    }
    gradient[gradient.size() - 1] += residual;
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (double& g : gradient) {
    g *= scale;
  }
  return loss * scale;
}

ModelRecord train_classifier(const SyntheticTask& task,
                             const std::optional<LengthPerturbConfig>& lp_cfg,
                             const TrainOptions& options, std::uint64_t seed) {
  const std::size_t n = task.train.size();
  const std::size_t dim = static_cast<std::size_t>(task.config.feature_dim);

  std::vector<int> classes(n);
  for (std::size_t i = 0; i < n; ++i) {
    classes[i] = class_of(task.train[i]);
  }

  ModelRecord model;
  model.weights.assign(dim + 1, 0.0);
  std::vector<double> gradient(dim + 1, 0.0);
  std::vector<std::vector<double>> pooled(n);

  for (int epoch = 1; epoch <= options.epochs; ++epoch) {
    for (std::size_t i = 0; i < n; ++i) {
      if (lp_cfg) {
        RandomStream rng = derive_stream(seed, task.train[i].id,
                                         static_cast<std::uint64_t>(epoch));
        pooled[i] =
            mean_pool(perturb_utterance(task.train[i], *lp_cfg, rng).features);
      } else {
        pooled[i] = mean_pool(task.train[i].features);
      }
    }
    const double loss =
        loss_and_gradient(model.weights, pooled, classes, gradient);
    if (!std::isfinite(loss)) {
      throw TrainingError("training loss is non-finite at epoch " +
                          std::to_string(epoch));
    }
    model.loss_trace.push_back(loss);
    for (std::size_t d = 0; d < model.weights.size(); ++d) {
      model.weights[d] -= options.step_size * gradient[d];
    }
  }
  return model;
}

double evaluate(const ModelRecord& model, std::span<const Utterance> split) {
  if (split.empty()) {
    return 0.0;
  }
  std::size_t correct = 0;
  for (const Utterance& u : split) {
    const std::vector<double> pooled = mean_pool(u.features);
    const double z = dot_with_bias(model.weights, pooled);
    const int predicted = z > 0.0 ? 1 : 0;
    if (predicted == class_of(u)) {
      ++correct;
    }
  }
  return static_cast<double>(correct) / static_cast<double>(split.size());
}

SimulationResult run_simulation(std::size_t n_seeds, const TaskConfig& cfg,
                                const LengthPerturbConfig& lp_cfg,
                                const TrainOptions& options) {
  SimulationResult result;
  for (std::uint64_t seed = 1; seed <= n_seeds; ++seed) {
    const SyntheticTask task = generate_task(cfg, seed);
    const ModelRecord baseline =
        train_classifier(task, std::nullopt, options, seed);
    const ModelRecord augmented =
        train_classifier(task, lp_cfg, options, seed);

    SeedOutcome outcome;
    outcome.seed = seed;
    outcome.baseline_accuracy = evaluate(baseline, task.test);
    outcome.augmented_accuracy = evaluate(augmented, task.test);
    outcome.augmented_wins =
        outcome.augmented_accuracy >= outcome.baseline_accuracy;
    if (outcome.augmented_wins) {
      ++result.wins;
    }
    result.outcomes.push_back(outcome);
  }
  return result;
}

}  // namespace seqaug::evalsim
