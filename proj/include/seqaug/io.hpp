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

#ifndef SEQAUG_IO_HPP
#define SEQAUG_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "seqaug/labelsmooth.hpp"  // ParseError
#include "seqaug/types.hpp"

namespace seqaug {

/// Malformed binary container; the message carries the byte offset.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File open/read/write failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// FSEQ container, little-endian throughout:
//   bytes 0..4   magic "FSEQ1"
//   bytes 5..8   u32 frame count T
//   bytes 9..12  u32 feature dim D
//   bytes 13..16 u32 frame shift in microseconds
//   bytes 17..   T*D IEEE-754 binary32 values, row-major (time-major)
// Write then read preserves every value bit-for-bit.
//
// read_featseq sniffs the magic; files without it are parsed as CSV (one
// frame per line, comma-separated decimal reals, rounded to nearest float).
FeatureSequence read_featseq(const std::filesystem::path& path);
void write_featseq(const std::filesystem::path& path,
                   const FeatureSequence& seq);

FeatureSequence read_featseq_binary(std::istream& in);
void write_featseq_binary(std::ostream& out, const FeatureSequence& seq);
FeatureSequence read_featseq_csv(std::istream& in);

/// One manifest line: utterance id, feature file path, transcript tokens.
struct ManifestRecord {
  std::string id;
  std::string features_path;
  std::vector<std::string> transcript;

  bool operator==(const ManifestRecord&) const = default;
};

/// Ordered record list; ids are unique. `features_path` entries are kept
/// verbatim; relative ones resolve against the manifest's directory.
struct Manifest {
  std::vector<ManifestRecord> records;

  bool operator==(const Manifest&) const = default;
};

/// Tab-separated, one record per line: <id> TAB <features_path> TAB
/// <transcript words...>; the transcript field may be absent or empty.
/// When `verify_paths` is set, every referenced feature file must exist.
Manifest read_manifest(const std::filesystem::path& path,
                       bool verify_paths = true);
void write_manifest(const std::filesystem::path& path,
                    const Manifest& manifest);

/// Resolves a record's features_path against the manifest location.
std::filesystem::path resolve_features_path(
    const std::filesystem::path& manifest_path, const ManifestRecord& record);

/// Loads a manifest record into an Utterance.
Utterance load_utterance(const std::filesystem::path& manifest_path,
                         const ManifestRecord& record);

/// Renders the matrix as a binary PGM (P5), width = frames, height = dim,
/// maxval 255. Pixels are min-max normalized over the whole matrix:
/// round(255 * (v - min) / (max - min)); a constant matrix renders as 128.
void render_pgm(const FeatureSequence& seq, const std::filesystem::path& path);
void render_pgm(const FeatureSequence& seq, std::ostream& out);

}  // namespace seqaug

#endif  // SEQAUG_IO_HPP
