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

#ifndef SEQAUG_LENPERTURB_HPP
#define SEQAUG_LENPERTURB_HPP

#include "seqaug/random.hpp"
#include "seqaug/types.hpp"

namespace seqaug {

/// Number of frames selected for perturbation: floor(ratio * frames).
/// Zero means that pass is a no-op.
std::size_t perturb_count(double ratio, std::size_t frames);

/// Drops runs of consecutive frames.
///
/// With T = seq.frames() and m = perturb_count(drop_ratio, T), samples m
/// distinct start indices without replacement, then draws one run length in
/// {1..max_drop_run} per start (in selection order). Each run marks
/// [start, min(start+len, T)) for deletion in a mask over the original index
/// space; overlapping runs union, so the result is independent of selection
/// order. Survivors keep their original order and exact values.
///
/// Returns the input unchanged when m == 0 or max_drop_run == 0 (consuming no
/// draws), or when fewer than min_out_frames frames would survive (draws
/// already consumed).
FeatureSequence drop_frames(const FeatureSequence& seq, double drop_ratio,
                            int max_drop_run, int min_out_frames,
                            RandomStream& rng);

/// Inserts runs of all-zero frames.
///
/// With m = perturb_count(insert_ratio, T), samples m distinct anchor indices
/// without replacement, then draws one run length in {1..max_insert_run} per
/// anchor (in selection order). The output is the original sequence with each
/// anchor's blank run placed immediately after it; anchors index the original
/// sequence, so insertions never interact. Identity when m == 0 or
/// max_insert_run == 0, consuming no draws.
FeatureSequence insert_frames(const FeatureSequence& seq, double insert_ratio,
                              int max_insert_run, RandomStream& rng);

/// Full perturbation pass over one utterance: drop first, then insert into
/// the post-drop sequence, each behind its own probability gate.
///
/// Draw order is fixed: one unit-real gate draw for dropping, the drop draws
/// if that gate opens, one gate draw for insertion, then the insertion draws.
/// Both gate draws are consumed even when closed, so downstream draw
/// positions do not depend on gate outcomes. Labels and id pass through.
Utterance perturb_utterance(const Utterance& u, const LengthPerturbConfig& cfg,
                            RandomStream& rng);

}  // namespace seqaug

#endif  // SEQAUG_LENPERTURB_HPP
