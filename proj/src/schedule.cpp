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

#include "seqaug/schedule.hpp"

#include <atomic>
#include <optional>
#include <thread>

#include "seqaug/lenperturb.hpp"

namespace seqaug {

namespace {

void validate_range(const std::optional<EpochRange>& range, const char* name) {
  if (!range) return;
  if (range->first < 1 || range->last < range->first) {
    throw ConfigError(std::string("schedule: bad epoch range for ") + name);
  }
}

struct WorkerTally {
  std::size_t labels_replaced = 0;
  std::size_t missing_nbest = 0;
};

}  // namespace

void ScheduleSpec::validate() const {
  validate_range(lenpb, "lenpb");
  validate_range(nbestls, "nbestls");
}

bool is_active(Technique technique, int epoch, const ScheduleSpec& spec) {
  const auto& range =
      technique == Technique::kLengthPerturb ? spec.lenpb : spec.nbestls;
  return range && range->contains(epoch);
}

std::vector<Utterance> apply_epoch(const std::vector<Utterance>& utterances,
                                   int epoch, const LengthPerturbConfig& lp_cfg,
                                   const SmoothingConfig& sm_cfg,
                                   const NBestCollection& nbest,
                                   const ScheduleSpec& spec,
                                   std::uint64_t global_seed, int threads,
                                   EpochStats* stats) {
  const bool do_perturb = is_active(Technique::kLengthPerturb, epoch, spec);
  const bool do_smooth = is_active(Technique::kLabelSmooth, epoch, spec);
  const std::size_t n = utterances.size();

  std::vector<std::optional<Utterance>> results(n);
  static const NBestSet kEmptySet{};

  auto process_one = [&](std::size_t i, WorkerTally& tally) {
    const Utterance& input = utterances[i];
    RandomStream rng = derive_stream(global_seed, input.id,
                                     static_cast<std::uint64_t>(epoch));

    std::vector<std::string> labels = input.labels;
    if (do_smooth) {
      const NBestSet* set = nbest.find(input.id);
      if (set == nullptr) {
        ++tally.missing_nbest;
        set = &kEmptySet;
      }
      SmoothOutcome outcome = smooth_select(labels, *set, sm_cfg, rng);
      if (outcome.replaced) ++tally.labels_replaced;
      labels = std::move(outcome.labels);
    }

    if (do_perturb) {
      Utterance tmp(input.id, input.features, std::move(labels));
      results[i] = perturb_utterance(tmp, lp_cfg, rng);
    } else {
      results[i] = Utterance(input.id, input.features, std::move(labels));
    }
  };

  WorkerTally total_tally;
  const int worker_count = std::max(1, threads);
  if (worker_count == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      process_one(i, total_tally);
    }
  } else {
    std::atomic<std::size_t> next_index{0};
    std::vector<WorkerTally> tallies(static_cast<std::size_t>(worker_count));
    {
      std::vector<std::jthread> workers;
      workers.reserve(static_cast<std::size_t>(worker_count));
      for (int w = 0; w < worker_count; ++w) {
        workers.emplace_back([&, w] {
          for (;;) {
            const std::size_t i = next_index.fetch_add(1);
            if (i >= n) break;
            process_one(i, tallies[static_cast<std::size_t>(w)]);
          }
        });
      }
    }
    for (const WorkerTally& t : tallies) {
      total_tally.labels_replaced += t.labels_replaced;
      total_tally.missing_nbest += t.missing_nbest;
    }
  }

  if (stats != nullptr) {
    stats->total += n;
    stats->labels_replaced += total_tally.labels_replaced;
    stats->missing_nbest += total_tally.missing_nbest;
  }

  std::vector<Utterance> out;
  out.reserve(n);
  for (auto& slot : results) {
    out.push_back(std::move(*slot));
  }
  return out;
}

}  // namespace seqaug
