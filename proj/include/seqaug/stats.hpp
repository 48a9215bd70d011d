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

#ifndef SEQAUG_STATS_HPP
#define SEQAUG_STATS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "seqaug/types.hpp"

namespace seqaug {

/// (id, frame count) pair; the unit the length report works on.
struct SequenceLength {
  std::string id;
  std::size_t frames = 0;
};

/// Frame-count deltas between a before and an after pass over one corpus.
/// The histogram has unit-width bins over [-50, 50]; deltas outside land in
/// the underflow/overflow counters.
struct LengthReport {
  std::size_t count = 0;
  double mean_delta = 0.0;
  double stddev_delta = 0.0;  // population standard deviation
  long long min_delta = 0;
  long long max_delta = 0;
  std::map<long long, std::size_t> histogram;  // only nonzero bins
  std::size_t underflow = 0;                   // delta < -50
  std::size_t overflow = 0;                    // delta > +50
};

/// Streams must be aligned: same length, same ids in the same positions.
LengthReport length_report(std::span<const SequenceLength> before,
                           std::span<const SequenceLength> after);

std::string format_report(const LengthReport& report);

/// Expected frame-count growth of the insertion pass:
/// floor(insert_ratio * frames) * (max_insert_run + 1) / 2.
double expected_insert_growth(std::size_t frames, double insert_ratio,
                              int max_insert_run);

/// One empirical-rate check with its pass band (4 binomial standard errors).
struct RateCheck {
  std::string name;
  double expected = 0.0;
  double empirical = 0.0;
  double band = 0.0;
  std::size_t trials = 0;
  bool pass = false;
};

struct VerificationRecord {
  std::vector<RateCheck> checks;
  bool all_pass = false;
};

/// Runs synthetic utterances through the perturbation and smoothing paths
/// and compares empirical gate/replacement rates against the configured
/// probabilities. Deterministic given the seed.
VerificationRecord verify_rates(std::size_t n_trials,
                                const LengthPerturbConfig& lp_cfg,
                                const SmoothingConfig& sm_cfg,
                                std::uint64_t seed);

std::string format_report(const VerificationRecord& record);

}  // namespace seqaug

#endif  // SEQAUG_STATS_HPP
