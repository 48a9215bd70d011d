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

#ifndef SEQAUG_TYPES_HPP
#define SEQAUG_TYPES_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqaug {

/// Raised when a configuration fails validation (distinct from file parse
/// errors so the CLI can map it to its own exit code).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A T x D matrix of feature frames: T time steps, D feature dimensions.
/// Immutable after construction; values are 32-bit floats to match the
/// on-disk container. The frame shift is carried as metadata only.
class FeatureSequence {
 public:
  FeatureSequence(std::vector<float> values, std::size_t frames,
                  std::size_t dim, double frame_shift_ms = 10.0);

  /// Constant-fill convenience (used heavily by tests and generators).
  FeatureSequence(std::size_t frames, std::size_t dim, float fill = 0.0f,
                  double frame_shift_ms = 10.0);

  std::size_t frames() const noexcept { return frames_; }
  std::size_t dim() const noexcept { return dim_; }
  double frame_shift_ms() const noexcept { return frame_shift_ms_; }

  float at(std::size_t t, std::size_t d) const {
    return values_[t * dim_ + d];
  }
  std::span<const float> frame(std::size_t t) const {
    return {values_.data() + t * dim_, dim_};
  }
  std::span<const float> values() const noexcept { return values_; }

  bool operator==(const FeatureSequence&) const = default;

 private:
  std::vector<float> values_;  // row-major, frames_ x dim_
  std::size_t frames_ = 0;
  std::size_t dim_ = 0;
  double frame_shift_ms_ = 10.0;
};

/// One training utterance: a manifest key, its feature matrix and its
/// ground-truth token sequence. The id doubles as a file-format key, so it
/// must be nonempty and free of whitespace.
struct Utterance {
  Utterance(std::string id, FeatureSequence features,
            std::vector<std::string> labels);

  std::string id;
  FeatureSequence features;
  std::vector<std::string> labels;

  bool operator==(const Utterance&) const = default;
};

/// Hyper-parameters of the length perturbation pass. Dropping and insertion
/// are gated independently; a zero max run length disables that pass outright.
struct LengthPerturbConfig {
  double drop_prob = 0.0;    // probability an utterance gets frames dropped
  double drop_ratio = 0.0;   // fraction of frames picked as drop-run starts
  int max_drop_run = 0;      // each run drops 1..max_drop_run frames
  double insert_prob = 0.0;  // probability an utterance gets blanks inserted
  double insert_ratio = 0.0; // fraction of frames picked as insertion anchors
  int max_insert_run = 0;    // each anchor inserts 1..max_insert_run blanks
  int min_out_frames = 1;    // dropping is skipped if fewer frames would survive

  void validate() const;

  bool operator==(const LengthPerturbConfig&) const = default;
};

/// Hyper-parameters of n-best label replacement: with probability `epsilon`
/// the ground truth is swapped for one of the top `max_hypotheses` entries.
struct SmoothingConfig {
  double epsilon = 0.0;
  int max_hypotheses = 1;

  void validate() const;

  bool operator==(const SmoothingConfig&) const = default;
};

}  // namespace seqaug

#endif  // SEQAUG_TYPES_HPP
