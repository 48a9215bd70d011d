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

#ifndef SEQAUG_LABELSMOOTH_HPP
#define SEQAUG_LABELSMOOTH_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqaug/random.hpp"
#include "seqaug/types.hpp"

namespace seqaug {

/// Parse failure in a line-oriented text format; carries the 1-based line
/// number in the message.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One decoder hypothesis for an utterance: its tokens plus an optional score.
struct NBestEntry {
  std::vector<std::string> tokens;
  std::optional<double> score;

  bool operator==(const NBestEntry&) const = default;
};

/// Ranked hypothesis list for one utterance; position 0 is the best.
struct NBestSet {
  std::string utt_id;
  std::vector<NBestEntry> hypotheses;

  bool operator==(const NBestSet&) const = default;
};

/// All hypothesis sets from one file, keyed by utterance id. Preserves the
/// first-appearance order of ids so serialization round-trips byte-exactly.
class NBestCollection {
 public:
  /// Returns nullptr when the id has no entry.
  const NBestSet* find(const std::string& utt_id) const;

  /// Appends a new set; the id must not already be present.
  void add(NBestSet set);

  const std::vector<NBestSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }

  bool operator==(const NBestCollection& other) const {
    return sets_ == other.sets_;
  }

 private:
  std::vector<NBestSet> sets_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Probabilistic ground-truth replacement over a ranked hypothesis list.
struct SmoothOutcome {
  std::vector<std::string> labels;
  bool replaced = false;
  int chosen_index = -1;  // 0-based hypothesis index when replaced
};

/// Draws one unit real g; keeps the truth when g <= 1 - epsilon or when no
/// hypotheses exist, otherwise replaces it with a uniformly chosen hypothesis
/// among the top min(max_hypotheses, available). The index draw is consumed
/// only on replacement.
SmoothOutcome smooth_select(const std::vector<std::string>& truth,
                            const NBestSet& nbest, const SmoothingConfig& cfg,
                            RandomStream& rng);

/// A probability vector over classes; entries are >= 0 and sum to 1.
struct SmoothedDistribution {
  std::vector<double> probabilities;

  bool operator==(const SmoothedDistribution&) const = default;
};

/// The conventional smoothed one-hot target: the true class gets
/// (1 - epsilon) + epsilon/num_classes, every other class epsilon/num_classes.
SmoothedDistribution smooth_one_hot(std::size_t class_index,
                                    std::size_t num_classes, double epsilon);

/// Smoothed cross entropy (natural log):
///   (1 - epsilon) * H(p, q) + epsilon * H(u, q)
/// with u uniform. Requires strictly positive q.
double smoothed_cross_entropy(const SmoothedDistribution& truth,
                              const SmoothedDistribution& model,
                              double epsilon);

/// Hypothesis file format, UTF-8, tab-separated:
///   <utt_id> TAB <rank> TAB <hypothesis text> [TAB <score>]
/// Ranks per id must be 1..n contiguous ascending (lines for one id need not
/// be adjacent). Hypothesis text is whitespace-tokenized and must be
/// nonempty. `#` starts a comment line; blank lines are skipped.
NBestCollection parse_nbest_file(std::istream& in);

/// Inverse of parse_nbest_file modulo comments and blank lines; parse then
/// serialize then parse is a fixed point.
void serialize_nbest(const NBestCollection& collection, std::ostream& out);

}  // namespace seqaug

#endif  // SEQAUG_LABELSMOOTH_HPP
