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

#include "seqaug/lenperturb.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace seqaug {

std::size_t perturb_count(double ratio, std::size_t frames) {
  if (ratio <= 0.0) {
    return 0;
  }
  const double count = std::floor(ratio * static_cast<double>(frames));
  return static_cast<std::size_t>(count);
}

FeatureSequence drop_frames(const FeatureSequence& seq, double drop_ratio,
                            int max_drop_run, int min_out_frames,
                            RandomStream& rng) {
  const std::size_t total = seq.frames();
  const std::size_t picks = perturb_count(drop_ratio, total);
  if (picks == 0 || max_drop_run <= 0) {
    return seq;
  }

  const std::vector<std::size_t> starts =
      rng.sample_without_replacement(total, picks);
  std::vector<bool> dropped(total, false);
  for (std::size_t start : starts) {
    const auto run = static_cast<std::size_t>(
        rng.next_int_inclusive(1, max_drop_run));
    const std::size_t end = std::min(start + run, total);
    for (std::size_t t = start; t < end; ++t) {
      dropped[t] = true;
    }
  }

  const std::size_t surviving = static_cast<std::size_t>(
      std::count(dropped.begin(), dropped.end(), false));
  if (surviving < static_cast<std::size_t>(min_out_frames)) {
    return seq;  // too short to keep; skip the perturbation entirely
  }

  const std::size_t dim = seq.dim();
  std::vector<float> values;
  values.reserve(surviving * dim);
  for (std::size_t t = 0; t < total; ++t) {
    if (!dropped[t]) {
      const auto row = seq.frame(t);
      values.insert(values.end(), row.begin(), row.end());
    }
  }
  return FeatureSequence(std::move(values), surviving, dim,
                         seq.frame_shift_ms());
}

FeatureSequence insert_frames(const FeatureSequence& seq, double insert_ratio,
                              int max_insert_run, RandomStream& rng) {
  const std::size_t total = seq.frames();
  const std::size_t picks = perturb_count(insert_ratio, total);
  if (picks == 0 || max_insert_run <= 0) {
    return seq;
  }

  const std::vector<std::size_t> anchors =
      rng.sample_without_replacement(total, picks);
  std::vector<std::size_t> blanks_after(total, 0);
  std::size_t inserted = 0;
  for (std::size_t anchor : anchors) {
    const auto run = static_cast<std::size_t>(
        rng.next_int_inclusive(1, max_insert_run));
    blanks_after[anchor] = run;
    inserted += run;
  }

  const std::size_t dim = seq.dim();
  std::vector<float> values;
  values.reserve((total + inserted) * dim);
  for (std::size_t t = 0; t < total; ++t) {
    const auto row = seq.frame(t);
    values.insert(values.end(), row.begin(), row.end());
    values.insert(values.end(), blanks_after[t] * dim, 0.0f);
  }
  return FeatureSequence(std::move(values), total + inserted, dim,
                         seq.frame_shift_ms());
}

Utterance perturb_utterance(const Utterance& u, const LengthPerturbConfig& cfg,
                            RandomStream& rng) {
  FeatureSequence features = u.features;

  const double drop_gate = rng.next_unit_real();
  if (drop_gate < cfg.drop_prob) {
    features = drop_frames(features, cfg.drop_ratio, cfg.max_drop_run,
                           cfg.min_out_frames, rng);
  }

  const double insert_gate = rng.next_unit_real();
  if (insert_gate < cfg.insert_prob) {
    features = insert_frames(features, cfg.insert_ratio, cfg.max_insert_run,
                             rng);
  }

  return Utterance(u.id, std::move(features), u.labels);
}

}  // namespace seqaug
