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

#ifndef SEQAUG_PRESETS_HPP
#define SEQAUG_PRESETS_HPP

#include <span>
#include <string_view>

#include "seqaug/schedule.hpp"
#include "seqaug/types.hpp"

namespace seqaug {

/// A full named recipe: perturbation and smoothing hyper-parameters plus the
/// epoch windows they are live in. Names encode corpus family (swb = English
/// narrowband recipes, jpn = Japanese broadband recipes), technique and the
/// probability / run-length settings.
struct Preset {
  std::string_view name;
  LengthPerturbConfig lenperturb;
  SmoothingConfig smoothing;
  ScheduleSpec schedule;
};

/// Returns nullptr if no preset has that name.
const Preset* find_preset(std::string_view name);

std::span<const Preset> all_presets();

}  // namespace seqaug

#endif  // SEQAUG_PRESETS_HPP
