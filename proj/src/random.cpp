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

#include "seqaug/random.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace seqaug {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64_step(std::uint64_t x) {
  std::uint64_t z = x + kGoldenGamma;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_text(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV offset basis
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;  // FNV prime
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t global_seed,
                          std::string_view utterance_id, std::uint64_t epoch) {
  std::uint64_t k = splitmix64_step(global_seed);
  k = splitmix64_step(k ^ hash_text(utterance_id));
  k = splitmix64_step(k ^ epoch);
  return k;
}

RandomStream derive_stream(std::uint64_t global_seed,
                           std::string_view utterance_id, std::uint64_t epoch) {
  return RandomStream(derive_seed(global_seed, utterance_id, epoch));
}

RandomStream::RandomStream(std::uint64_t seed) {
  // Expand the seed into the xoshiro state with a splitmix64 run.
  std::uint64_t s = seed;
  for (auto& word : state_) {
    word = splitmix64_step(s);
    s = word;
  }
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
    state_[0] = 1;  // xoshiro forbids the all-zero state
  }
}

std::uint64_t RandomStream::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomStream::next_unit_real() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::int64_t RandomStream::next_int_inclusive(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw std::invalid_argument("next_int_inclusive: lo > hi");
  }
  const std::uint64_t range =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) {  // full 64-bit span
    return static_cast<std::int64_t>(next_u64());
  }
  const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod range
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) {
      return lo + static_cast<std::int64_t>(r % range);
    }
  }
}

std::vector<std::size_t> RandomStream::sample_without_replacement(
    std::size_t n, std::size_t m) {
  if (m > n) {
    throw std::invalid_argument("sample_without_replacement: m > n");
  }
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < m; ++i) {
    const auto j = static_cast<std::size_t>(next_int_inclusive(
        static_cast<std::int64_t>(i), static_cast<std::int64_t>(n - 1)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  return pool;
}

}  // namespace seqaug
