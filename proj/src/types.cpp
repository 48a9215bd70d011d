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

#include "seqaug/types.hpp"

#include <cctype>
#include <cmath>

namespace seqaug {

namespace {

void check_values_finite(std::span<const float> values) {
  for (float v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("FeatureSequence: non-finite value");
    }
  }
}

}  // namespace

FeatureSequence::FeatureSequence(std::vector<float> values, std::size_t frames,
                                 std::size_t dim, double frame_shift_ms)
    : values_(std::move(values)),
      frames_(frames),
      dim_(dim),
      frame_shift_ms_(frame_shift_ms) {
  if (frames_ < 1 || dim_ < 1) {
    throw std::invalid_argument("FeatureSequence: frames and dim must be >= 1");
  }
  if (values_.size() != frames_ * dim_) {
    throw std::invalid_argument("FeatureSequence: value count != frames * dim");
  }
  if (!(frame_shift_ms_ > 0.0) || !std::isfinite(frame_shift_ms_)) {
    throw std::invalid_argument("FeatureSequence: frame shift must be positive");
  }
  check_values_finite(values_);
}

FeatureSequence::FeatureSequence(std::size_t frames, std::size_t dim,
                                 float fill, double frame_shift_ms)
    : FeatureSequence(std::vector<float>(frames * dim, fill), frames, dim,
                      frame_shift_ms) {}

Utterance::Utterance(std::string id_in, FeatureSequence features_in,
                     std::vector<std::string> labels_in)
    : id(std::move(id_in)),
      features(std::move(features_in)),
      labels(std::move(labels_in)) {
  if (id.empty()) {
    throw std::invalid_argument("Utterance: id must be nonempty");
  }
  for (unsigned char c : id) {
    if (std::isspace(c)) {
      throw std::invalid_argument("Utterance: id must not contain whitespace");
    }
  }
  for (const std::string& token : labels) {
    if (token.empty()) {
      throw std::invalid_argument("Utterance: label tokens must be nonempty");
    }
  }
}

void LengthPerturbConfig::validate() const {
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_unit(drop_prob) || !in_unit(insert_prob)) {
    throw ConfigError("length perturbation: probabilities must be in [0,1]");
  }
  if (!in_unit(drop_ratio) || !in_unit(insert_ratio)) {
    throw ConfigError("length perturbation: ratios must be in [0,1]");
  }
  if (max_drop_run < 0 || max_insert_run < 0) {
    throw ConfigError("length perturbation: max run lengths must be >= 0");
  }
  if (min_out_frames < 1) {
    throw ConfigError("length perturbation: min_out_frames must be >= 1");
  }
}

void SmoothingConfig::validate() const {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ConfigError("smoothing: epsilon must be in [0,1]");
  }
  if (max_hypotheses < 1) {
    throw ConfigError("smoothing: max_hypotheses must be >= 1");
  }
}

}  // namespace seqaug
