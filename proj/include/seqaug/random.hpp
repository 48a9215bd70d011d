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

#ifndef SEQAUG_RANDOM_HPP
#define SEQAUG_RANDOM_HPP

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace seqaug {

// Deterministic cross-platform PRNG (xoshiro256** seeded via splitmix64).
// std::uniform_*_distribution is implementation-defined, so every draw path
// here is spelled out explicitly:
//
//   next_u64            one xoshiro256** step
//   next_unit_real      (next_u64() >> 11) * 2^-53, uniform in [0,1)
//   next_int_inclusive  modulo rejection: reject raw draws below
//                       (2^64 - range) mod range, then a + raw % range
//   sample_without_replacement
//                       partial Fisher-Yates over {0..n-1}; consumes exactly
//                       m next_int_inclusive draws, returns picks in
//                       selection order (a full permutation when m == n)
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();
  double next_unit_real();
  std::int64_t next_int_inclusive(std::int64_t lo, std::int64_t hi);
  std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                      std::size_t m);

 private:
  std::array<std::uint64_t, 4> state_;
};

/// One splitmix64 step applied to `x` as the state: adds the golden-gamma
/// increment and runs the finalizer. Pure; the building block of all seed
/// derivation below.
std::uint64_t splitmix64_step(std::uint64_t x);

/// FNV-1a 64-bit hash over the raw bytes of `text`.
std::uint64_t hash_text(std::string_view text);

/// Derivation recipe (fixed; golden files depend on it):
///   k = splitmix64_step(global_seed)
///   k = splitmix64_step(k ^ hash_text(utterance_id))
///   k = splitmix64_step(k ^ epoch)
/// The result seeds the stream. Pure function of its arguments, so parallel
/// and sequential runs derive identical streams per (utterance, epoch).
std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view utterance_id,
                          std::uint64_t epoch);

RandomStream derive_stream(std::uint64_t global_seed,
                           std::string_view utterance_id, std::uint64_t epoch);

}  // namespace seqaug

#endif  // SEQAUG_RANDOM_HPP
