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

#include "seqaug/presets.hpp"

#include <array>

namespace seqaug {

namespace {

constexpr double kOff = 0.0;

LengthPerturbConfig lp(double drop_prob, double drop_ratio, int max_drop_run,
                       double insert_prob, double insert_ratio,
                       int max_insert_run) {
  LengthPerturbConfig cfg;
  cfg.drop_prob = drop_prob;
  cfg.drop_ratio = drop_ratio;
  cfg.max_drop_run = max_drop_run;
  cfg.insert_prob = insert_prob;
  cfg.insert_ratio = insert_ratio;
  cfg.max_insert_run = max_insert_run;
  return cfg;
}

LengthPerturbConfig lp_drop(double prob, double ratio, int run) {
  return lp(prob, ratio, run, kOff, kOff, 0);
}

LengthPerturbConfig lp_insert(double prob, double ratio, int run) {
  return lp(kOff, kOff, 0, prob, ratio, run);
}

LengthPerturbConfig lp_both(double prob, double ratio, int drop_run,
                            int insert_run) {
  return lp(prob, ratio, drop_run, prob, ratio, insert_run);
}

SmoothingConfig sm(double epsilon, int k) { return {epsilon, k}; }

constexpr SmoothingConfig kNoSmooth{0.0, 1};
constexpr LengthPerturbConfig kNoPerturb{};

ScheduleSpec single(EpochRange lenpb_range) {
  return {lenpb_range, std::nullopt};
}
ScheduleSpec smooth_only(EpochRange nbestls_range) {
  return {std::nullopt, nbestls_range};
}
ScheduleSpec combo(EpochRange nbestls_range, EpochRange lenpb_range) {
  return {lenpb_range, nbestls_range};
}

// The recipes: the single-technique presets run over epochs 1-25 and are
// lifted afterwards; the combined presets smooth over epochs 1-15 and perturb
// over 16-30 (swb) or 16-25 (jpn).
const std::array<Preset, 38> kPresets{{
    // Headline recipes.
    {"swb-lenpb-only", lp_both(0.7, 0.1, 7, 3), kNoSmooth, single({1, 25})},
    {"swb-nbestls-only", kNoPerturb, sm(0.1, 20), smooth_only({1, 25})},
    {"swb-combo", lp_both(0.5, 0.1, 7, 3), sm(0.1, 20),
     combo({1, 15}, {16, 30})},
    {"jpn-lenpb-only", lp_drop(0.5, 0.1, 3), kNoSmooth, single({1, 25})},
    {"jpn-nbestls-only", kNoPerturb, sm(0.2, 30), smooth_only({1, 25})},
    {"jpn-combo", lp_both(0.4, 0.1, 3, 5), sm(0.2, 30),
     combo({1, 15}, {16, 25})},

    // English narrowband sweeps: insertion only.
    {"swb-insert-p60-r05-run5", lp_insert(0.6, 0.05, 5), kNoSmooth,
     single({1, 25})},
    {"swb-insert-p60-r10-run3", lp_insert(0.6, 0.1, 3), kNoSmooth,
     single({1, 25})},
    {"swb-insert-p60-r10-run7", lp_insert(0.6, 0.1, 7), kNoSmooth,
     single({1, 25})},
    {"swb-insert-p70-r10-run5", lp_insert(0.7, 0.1, 5), kNoSmooth,
     single({1, 25})},
    // Dropping only.
    {"swb-drop-p70-r10-run5", lp_drop(0.7, 0.1, 5), kNoSmooth, single({1, 25})},
    {"swb-drop-p70-r10-run7", lp_drop(0.7, 0.1, 7), kNoSmooth, single({1, 25})},
    {"swb-drop-p80-r10-run7", lp_drop(0.8, 0.1, 7), kNoSmooth, single({1, 25})},
    {"swb-drop-p70-r10-run9", lp_drop(0.7, 0.1, 9), kNoSmooth, single({1, 25})},
    // Both directions.
    {"swb-both-p60-run7-3", lp_both(0.6, 0.1, 7, 3), kNoSmooth, single({1, 25})},
    {"swb-both-p70-run7-3", lp_both(0.7, 0.1, 7, 3), kNoSmooth, single({1, 25})},
    {"swb-both-p80-run7-3", lp_both(0.8, 0.1, 7, 3), kNoSmooth, single({1, 25})},
    // Smoothing sweeps.
    {"swb-smooth-e10-k20", kNoPerturb, sm(0.1, 20), smooth_only({1, 25})},
    {"swb-smooth-e20-k20", kNoPerturb, sm(0.2, 20), smooth_only({1, 25})},
    {"swb-smooth-e10-k30", kNoPerturb, sm(0.1, 30), smooth_only({1, 25})},
    {"swb-smooth-e20-k30", kNoPerturb, sm(0.2, 30), smooth_only({1, 25})},
    // Combined sweeps.
    {"swb-combo-p50-run5-5", lp_both(0.5, 0.1, 5, 5), sm(0.1, 20),
     combo({1, 15}, {16, 30})},
    {"swb-combo-p60-run5-5", lp_both(0.6, 0.1, 5, 5), sm(0.1, 20),
     combo({1, 15}, {16, 30})},
    {"swb-combo-p50-run7-3", lp_both(0.5, 0.1, 7, 3), sm(0.1, 20),
     combo({1, 15}, {16, 30})},

    // Japanese broadband sweeps: insertion only.
    {"jpn-insert-p60-r10-run3", lp_insert(0.6, 0.1, 3), kNoSmooth,
     single({1, 25})},
    {"jpn-insert-p60-r10-run5", lp_insert(0.6, 0.1, 5), kNoSmooth,
     single({1, 25})},
    {"jpn-insert-p70-r10-run5", lp_insert(0.7, 0.1, 5), kNoSmooth,
     single({1, 25})},
    // Dropping only.
    {"jpn-drop-p50-r10-run3", lp_drop(0.5, 0.1, 3), kNoSmooth, single({1, 25})},
    {"jpn-drop-p60-r10-run3", lp_drop(0.6, 0.1, 3), kNoSmooth, single({1, 25})},
    {"jpn-drop-p50-r10-run5", lp_drop(0.5, 0.1, 5), kNoSmooth, single({1, 25})},
    // Both directions.
    {"jpn-both-p60-run3-3", lp_both(0.6, 0.1, 3, 3), kNoSmooth, single({1, 25})},
    {"jpn-both-p60-run3-5", lp_both(0.6, 0.1, 3, 5), kNoSmooth, single({1, 25})},
    {"jpn-both-p60-r20-run3-5", lp_both(0.6, 0.2, 3, 5), kNoSmooth,
     single({1, 25})},
    // Smoothing sweeps.
    {"jpn-smooth-e20-k10", kNoPerturb, sm(0.2, 10), smooth_only({1, 25})},
    {"jpn-smooth-e20-k20", kNoPerturb, sm(0.2, 20), smooth_only({1, 25})},
    {"jpn-smooth-e30-k30", kNoPerturb, sm(0.3, 30), smooth_only({1, 25})},
    // Combined sweeps (jpn-combo covers the p40 row).
    {"jpn-combo-p50", lp_both(0.5, 0.1, 3, 5), sm(0.2, 30),
     combo({1, 15}, {16, 25})},
    {"jpn-combo-p30", lp_both(0.3, 0.1, 3, 5), sm(0.2, 30),
     combo({1, 15}, {16, 25})},
}};

}  // namespace

const Preset* find_preset(std::string_view name) {
  for (const Preset& preset : kPresets) {
    if (preset.name == name) {
      return &preset;
    }
  }
  return nullptr;
}

std::span<const Preset> all_presets() { return kPresets; }

}  // namespace seqaug
