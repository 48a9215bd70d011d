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

#ifndef SEQAUG_SCHEDULE_HPP
#define SEQAUG_SCHEDULE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "seqaug/labelsmooth.hpp"
#include "seqaug/types.hpp"

namespace seqaug {

/// Inclusive epoch window; epochs are 1-based.
struct EpochRange {
  int first = 1;
  int last = 1;

  bool contains(int epoch) const { return epoch >= first && epoch <= last; }
  bool operator==(const EpochRange&) const = default;
};

/// When each technique is live. An absent range means never.
struct ScheduleSpec {
  std::optional<EpochRange> lenpb;    // length perturbation window
  std::optional<EpochRange> nbestls;  // n-best label smoothing window

  void validate() const;
  bool operator==(const ScheduleSpec&) const = default;
};

enum class Technique { kLengthPerturb, kLabelSmooth };

bool is_active(Technique technique, int epoch, const ScheduleSpec& spec);

/// Counters accumulated over one epoch pass.
struct EpochStats {
  std::size_t total = 0;
  std::size_t labels_replaced = 0;
  std::size_t missing_nbest = 0;  // smoothing active but no hypothesis set
};

/// Applies the active techniques of one epoch to a whole batch.
///
/// Each utterance gets its own stream from (global_seed, id, epoch). Stream
/// draw layout per utterance: if smoothing is active, the gamma draw (plus
/// the hypothesis index draw on replacement); then, if perturbation is
/// active, the perturb_utterance draws. Utterances with no hypothesis set
/// keep their labels, still consuming the gamma draw, and are counted.
///
/// Output order equals input order and every output byte is independent of
/// `threads`; workers only split the index space.
std::vector<Utterance> apply_epoch(const std::vector<Utterance>& utterances,
                                   int epoch, const LengthPerturbConfig& lp_cfg,
                                   const SmoothingConfig& sm_cfg,
                                   const NBestCollection& nbest,
                                   const ScheduleSpec& spec,
                                   std::uint64_t global_seed, int threads = 1,
                                   EpochStats* stats = nullptr);

}  // namespace seqaug

#endif  // SEQAUG_SCHEDULE_HPP
