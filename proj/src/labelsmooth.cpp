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

#include "seqaug/labelsmooth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace seqaug {

namespace {

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    if (end > pos) {
      tokens.emplace_back(text.substr(pos, end - pos));
    }
    pos = end;
  }
  return tokens;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  std::ostringstream msg;
  msg << "nbest: line " << line_no << ": " << what;
  throw ParseError(msg.str());
}

}  // namespace

const NBestSet* NBestCollection::find(const std::string& utt_id) const {
  const auto it = index_.find(utt_id);
  return it == index_.end() ? nullptr : &sets_[it->second];
}

void NBestCollection::add(NBestSet set) {
  const auto [it, inserted] = index_.emplace(set.utt_id, sets_.size());
  if (!inserted) {
    throw std::invalid_argument("NBestCollection: duplicate id " + set.utt_id);
  }
  sets_.push_back(std::move(set));
}

SmoothOutcome smooth_select(const std::vector<std::string>& truth,
                            const NBestSet& nbest, const SmoothingConfig& cfg,
                            RandomStream& rng) {
  const double gamma = rng.next_unit_real();
  if (gamma <= 1.0 - cfg.epsilon || nbest.hypotheses.empty()) {
    return SmoothOutcome{truth, false, -1};
  }
  const auto available =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.max_hypotheses),
                            nbest.hypotheses.size());
  const auto index = static_cast<std::size_t>(
      rng.next_int_inclusive(0, static_cast<std::int64_t>(available) - 1));
  return SmoothOutcome{nbest.hypotheses[index].tokens, true,
                       static_cast<int>(index)};
}

SmoothedDistribution smooth_one_hot(std::size_t class_index,
                                    std::size_t num_classes, double epsilon) {
  if (class_index >= num_classes) {
    throw std::invalid_argument("smooth_one_hot: class index out of range");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("smooth_one_hot: epsilon must be in [0,1]");
  }
  const double floor = epsilon / static_cast<double>(num_classes);
  SmoothedDistribution dist;
  dist.probabilities.assign(num_classes, floor);
  dist.probabilities[class_index] = (1.0 - epsilon) + floor;
  return dist;
}

double smoothed_cross_entropy(const SmoothedDistribution& truth,
                              const SmoothedDistribution& model,
                              double epsilon) {
  const auto& p = truth.probabilities;
  const auto& q = model.probabilities;
  if (p.size() != q.size() || p.empty()) {
    throw std::invalid_argument(
        "smoothed_cross_entropy: distributions must have equal nonzero size");
  }
  for (double qk : q) {
    if (!(qk > 0.0)) {
      throw std::domain_error(
          "smoothed_cross_entropy: model entries must be strictly positive");
    }
  }
  const double uniform = 1.0 / static_cast<double>(q.size());
  double truth_term = 0.0;
  double uniform_term = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double log_q = std::log(q[k]);
    truth_term -= p[k] * log_q;
    uniform_term -= uniform * log_q;
  }
  return (1.0 - epsilon) * truth_term + epsilon * uniform_term;
}

NBestCollection parse_nbest_file(std::istream& in) {
  std::vector<NBestSet> sets;
  std::unordered_map<std::string, std::size_t> set_index;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') {
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() < 3 || fields.size() > 4) {
      parse_fail(line_no, "expected <id>\\t<rank>\\t<text>[\\t<score>]");
    }
    const std::string utt_id(fields[0]);
    if (utt_id.empty()) {
      parse_fail(line_no, "empty utterance id");
    }

    int rank = 0;
    auto [rank_end, rank_ec] = std::from_chars(
        fields[1].data(), fields[1].data() + fields[1].size(), rank);
    if (rank_ec != std::errc{} || rank_end != fields[1].data() + fields[1].size() ||
        rank < 1) {
      parse_fail(line_no, "malformed rank '" + std::string(fields[1]) + "'");
    }

    NBestEntry entry;
    entry.tokens = split_whitespace(fields[2]);
    if (entry.tokens.empty()) {
      parse_fail(line_no, "empty hypothesis text");
    }
    if (fields.size() == 4) {
      double score = 0.0;
      auto [score_end, score_ec] = std::from_chars(
          fields[3].data(), fields[3].data() + fields[3].size(), score);
      if (score_ec != std::errc{} ||
          score_end != fields[3].data() + fields[3].size()) {
        parse_fail(line_no, "malformed score '" + std::string(fields[3]) + "'");
      }
      entry.score = score;
    }

    auto [it, fresh] = set_index.emplace(utt_id, sets.size());
    if (fresh) {
      sets.push_back(NBestSet{utt_id, {}});
    }
    NBestSet& set = sets[it->second];
    const std::size_t seen = set.hypotheses.size();
    if (static_cast<std::size_t>(rank) <= seen) {
      parse_fail(line_no, "duplicate rank " + std::to_string(rank) + " for id " +
                              utt_id);
    }
    if (static_cast<std::size_t>(rank) != seen + 1) {
      parse_fail(line_no, "non-contiguous ranks for id " + utt_id +
                              " (expected " + std::to_string(seen + 1) +
                              ", got " + std::to_string(rank) + ")");
    }
    set.hypotheses.push_back(std::move(entry));
  }

  NBestCollection collection;
  for (NBestSet& set : sets) {
    collection.add(std::move(set));
  }
  return collection;
}

void serialize_nbest(const NBestCollection& collection, std::ostream& out) {
  char buf[64];
  for (const NBestSet& set : collection.sets()) {
    for (std::size_t i = 0; i < set.hypotheses.size(); ++i) {
      const NBestEntry& entry = set.hypotheses[i];
      out << set.utt_id << '\t' << (i + 1) << '\t';
      for (std::size_t t = 0; t < entry.tokens.size(); ++t) {
        if (t > 0) out << ' ';
        out << entry.tokens[t];
      }
      if (entry.score) {
        // Shortest round-trip representation keeps reparse exact.
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), *entry.score);
        out << '\t' << std::string_view(buf, static_cast<std::size_t>(end - buf));
        (void)ec;
      }
      out << '\n';
    }
  }
}

}  // namespace seqaug
