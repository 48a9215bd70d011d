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

#include "seqaug/stats.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "seqaug/lenperturb.hpp"
#include "seqaug/random.hpp"

namespace seqaug {

namespace {

constexpr long long kHistLimit = 50;

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

RateCheck make_check(std::string name, double expected, std::size_t hits,
                     std::size_t trials) {
  RateCheck check;
  check.name = std::move(name);
  check.expected = expected;
  check.trials = trials;
  check.empirical =
      static_cast<double>(hits) / static_cast<double>(trials);
  const double se =
      std::sqrt(expected * (1.0 - expected) / static_cast<double>(trials));
  check.band = 4.0 * se;
  check.pass = std::abs(check.empirical - expected) <= check.band;
  return check;
}

}  // namespace

LengthReport length_report(std::span<const SequenceLength> before,
                           std::span<const SequenceLength> after) {
  if (before.size() != after.size()) {
    throw std::invalid_argument("length_report: stream sizes differ");
  }
  LengthReport report;
  report.count = before.size();
  if (report.count == 0) {
    return report;
  }

  double sum = 0.0;
  double sum_sq = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i].id != after[i].id) {
      throw std::invalid_argument("length_report: id mismatch at position " +
                                  std::to_string(i) + " ('" + before[i].id +
                                  "' vs '" + after[i].id + "')");
    }
    const long long delta = static_cast<long long>(after[i].frames) -
                            static_cast<long long>(before[i].frames);
    sum += static_cast<double>(delta);
    sum_sq += static_cast<double>(delta) * static_cast<double>(delta);
    if (first || delta < report.min_delta) report.min_delta = delta;
    if (first || delta > report.max_delta) report.max_delta = delta;
    first = false;
    if (delta < -kHistLimit) {
      ++report.underflow;
    } else if (delta > kHistLimit) {
      ++report.overflow;
    } else {
      ++report.histogram[delta];
    }
  }
  const double n = static_cast<double>(report.count);
  report.mean_delta = sum / n;
  const double variance =
      std::max(0.0, sum_sq / n - report.mean_delta * report.mean_delta);
  report.stddev_delta = std::sqrt(variance);
  return report;
}

std::string format_report(const LengthReport& report) {
  std::ostringstream out;
  out << "count=" << report.count << '\n';
  out << "mean_delta=" << format_double(report.mean_delta) << '\n';
  out << "stddev_delta=" << format_double(report.stddev_delta) << '\n';
  out << "min_delta=" << report.min_delta << '\n';
  out << "max_delta=" << report.max_delta << '\n';
  for (const auto& [delta, count] : report.histogram) {
    out << "hist." << delta << '=' << count << '\n';
  }
  out << "underflow=" << report.underflow << '\n';
  out << "overflow=" << report.overflow << '\n';
  return out.str();
}

double expected_insert_growth(std::size_t frames, double insert_ratio,
                              int max_insert_run) {
  if (max_insert_run <= 0) {
    return 0.0;
  }
  const auto anchors = perturb_count(insert_ratio, frames);
  return static_cast<double>(anchors) *
         (static_cast<double>(max_insert_run) + 1.0) / 2.0;
}

VerificationRecord verify_rates(std::size_t n_trials,
                                const LengthPerturbConfig& lp_cfg,
                                const SmoothingConfig& sm_cfg,
                                std::uint64_t seed) {
  if (n_trials < 1) {
    throw std::invalid_argument("verify_rates: n_trials must be >= 1");
  }
  constexpr std::size_t kFrames = 50;
  constexpr std::size_t kDim = 4;
  const FeatureSequence probe(kFrames, kDim, 1.0f);

  // A gate that fires must change the length for the effect to be countable.
  const bool drop_observable =
      perturb_count(lp_cfg.drop_ratio, kFrames) >= 1 && lp_cfg.max_drop_run >= 1;
  const bool insert_observable =
      perturb_count(lp_cfg.insert_ratio, kFrames) >= 1 &&
      lp_cfg.max_insert_run >= 1;

  LengthPerturbConfig drop_only = lp_cfg;
  drop_only.insert_prob = 0.0;
  LengthPerturbConfig insert_only = lp_cfg;
  insert_only.drop_prob = 0.0;

  std::size_t drops = 0;
  std::size_t inserts = 0;
  std::size_t replacements = 0;

  const std::vector<std::string> truth{"truth"};
  NBestSet hypotheses;
  hypotheses.utt_id = "probe";
  for (int k = 0; k < sm_cfg.max_hypotheses; ++k) {
    hypotheses.hypotheses.push_back(
        NBestEntry{{"hyp" + std::to_string(k + 1)}, std::nullopt});
  }

  for (std::size_t i = 0; i < n_trials; ++i) {
    const std::string trial = std::to_string(i);
    {
      RandomStream rng = derive_stream(seed, "rate-drop-" + trial, 0);
      Utterance u("u", probe, {});
      if (perturb_utterance(u, drop_only, rng).features.frames() < kFrames) {
        ++drops;
      }
    }
    {
      RandomStream rng = derive_stream(seed, "rate-insert-" + trial, 0);
      Utterance u("u", probe, {});
      if (perturb_utterance(u, insert_only, rng).features.frames() > kFrames) {
        ++inserts;
      }
    }
    {
      RandomStream rng = derive_stream(seed, "rate-select-" + trial, 0);
      if (smooth_select(truth, hypotheses, sm_cfg, rng).replaced) {
        ++replacements;
      }
    }
  }

  VerificationRecord record;
  record.checks.push_back(make_check(
      "drop_gate", drop_observable ? lp_cfg.drop_prob : 0.0, drops, n_trials));
  record.checks.push_back(
      make_check("insert_gate", insert_observable ? lp_cfg.insert_prob : 0.0,
                 inserts, n_trials));
  record.checks.push_back(
      make_check("label_replacement", sm_cfg.epsilon, replacements, n_trials));
  record.all_pass = true;
  for (const RateCheck& check : record.checks) {
    record.all_pass = record.all_pass && check.pass;
  }
  return record;
}

std::string format_report(const VerificationRecord& record) {
  std::ostringstream out;
  for (const RateCheck& check : record.checks) {
    out << check.name << ".expected=" << format_double(check.expected) << '\n';
    out << check.name << ".empirical=" << format_double(check.empirical) << '\n';
    out << check.name << ".band=" << format_double(check.band) << '\n';
    out << check.name << ".trials=" << check.trials << '\n';
    out << check.name << ".pass=" << (check.pass ? 1 : 0) << '\n';
  }
  out << "all_pass=" << (record.all_pass ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace seqaug
