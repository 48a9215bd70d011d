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

#include "seqaug/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace seqaug {

namespace {

constexpr char kMagic[5] = {'F', 'S', 'E', 'Q', '1'};
constexpr std::size_t kHeaderBytes = 5 + 4 + 4 + 4;

[[noreturn]] void format_fail(std::size_t byte_offset, const std::string& what) {
  std::ostringstream msg;
  msg << "fseq: byte " << byte_offset << ": " << what;
  throw FormatError(msg.str());
}

void put_u32_le(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {
      static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
      static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes, 4);
}

std::uint32_t get_u32_le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint32_t frame_shift_to_us(double frame_shift_ms) {
  const double us = frame_shift_ms * 1000.0;
  if (!(us >= 1.0) || us > static_cast<double>(std::numeric_limits<std::uint32_t>::max())) {
    throw std::invalid_argument("fseq: frame shift out of range");
  }
  return static_cast<std::uint32_t>(std::llround(us));
}

}  // namespace

void write_featseq_binary(std::ostream& out, const FeatureSequence& seq) {
  out.write(kMagic, sizeof(kMagic));
  put_u32_le(out, static_cast<std::uint32_t>(seq.frames()));
  put_u32_le(out, static_cast<std::uint32_t>(seq.dim()));
  put_u32_le(out, frame_shift_to_us(seq.frame_shift_ms()));
  for (float v : seq.values()) {
    const auto bits = std::bit_cast<std::uint32_t>(v);
    put_u32_le(out, bits);
  }
}

FeatureSequence read_featseq_binary(std::istream& in) {
  unsigned char header[kHeaderBytes];
  in.read(reinterpret_cast<char*>(header), kHeaderBytes);
  if (in.gcount() != static_cast<std::streamsize>(kHeaderBytes)) {
    format_fail(static_cast<std::size_t>(in.gcount()), "truncated header");
  }
  if (!std::equal(kMagic, kMagic + sizeof(kMagic), header)) {
    format_fail(0, "bad magic");
  }
  const std::uint32_t frames = get_u32_le(header + 5);
  const std::uint32_t dim = get_u32_le(header + 9);
  const std::uint32_t shift_us = get_u32_le(header + 13);
  if (frames == 0 || dim == 0) {
    format_fail(5, "frame count and dim must be >= 1");
  }
  const std::uint64_t count =
      static_cast<std::uint64_t>(frames) * static_cast<std::uint64_t>(dim);
  if (count > std::numeric_limits<std::size_t>::max() / sizeof(float) ||
      count > (1ull << 40)) {
    format_fail(5, "declared size overflows");
  }
  if (shift_us == 0) {
    format_fail(13, "frame shift must be positive");
  }

  std::vector<float> values(static_cast<std::size_t>(count));
  std::vector<unsigned char> raw(static_cast<std::size_t>(count) * 4);
  in.read(reinterpret_cast<char*>(raw.data()),
          static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
    format_fail(kHeaderBytes + static_cast<std::size_t>(in.gcount()),
                "truncated payload");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::bit_cast<float>(get_u32_le(raw.data() + i * 4));
  }
  return FeatureSequence(std::move(values), frames, dim,
                         static_cast<double>(shift_us) / 1000.0);
}

FeatureSequence read_featseq_csv(std::istream& in) {
  std::vector<float> values;
  std::size_t frames = 0;
  std::size_t dim = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::size_t row_width = 0;
    const char* cursor = line.data();
    const char* end = line.data() + line.size();
    for (;;) {
      while (cursor < end && *cursor == ' ') ++cursor;
      float v = 0.0f;
      auto [next, ec] = std::from_chars(cursor, end, v);
      if (ec != std::errc{}) {
        throw ParseError("csv: line " + std::to_string(line_no) +
                         ": malformed value");
      }
      values.push_back(v);
      ++row_width;
      cursor = next;
      while (cursor < end && *cursor == ' ') ++cursor;
      if (cursor == end) break;
      if (*cursor != ',') {
        throw ParseError("csv: line " + std::to_string(line_no) +
                         ": expected ','");
      }
      ++cursor;
    }
    if (frames == 0) {
      dim = row_width;
    } else if (row_width != dim) {
      throw ParseError("csv: line " + std::to_string(line_no) +
                       ": ragged row (expected " + std::to_string(dim) +
                       " values, got " + std::to_string(row_width) + ")");
    }
    ++frames;
  }
  if (frames == 0) {
    throw ParseError("csv: no frames");
  }
  return FeatureSequence(std::move(values), frames, dim);
}

FeatureSequence read_featseq(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  char probe[5] = {};
  in.read(probe, sizeof(probe));
  const bool is_binary = in.gcount() == 5 && std::equal(kMagic, kMagic + 5, probe);
  in.clear();
  in.seekg(0);
  return is_binary ? read_featseq_binary(in) : read_featseq_csv(in);
}

void write_featseq(const std::filesystem::path& path,
                   const FeatureSequence& seq) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  write_featseq_binary(out, seq);
  out.flush();
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

Manifest read_manifest(const std::filesystem::path& path, bool verify_paths) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open manifest " + path.string());
  }

  Manifest manifest;
  std::unordered_map<std::string, std::size_t> first_line_of_id;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    const std::size_t tab1 = line.find('\t');
    if (tab1 == std::string::npos || tab1 == 0) {
      throw ParseError("manifest: line " + std::to_string(line_no) +
                       ": expected <id>\\t<features_path>[\\t<transcript>]");
    }
    const std::size_t tab2 = line.find('\t', tab1 + 1);
    ManifestRecord record;
    record.id = line.substr(0, tab1);
    if (tab2 == std::string::npos) {
      record.features_path = line.substr(tab1 + 1);
    } else {
      record.features_path = line.substr(tab1 + 1, tab2 - tab1 - 1);
      const std::string transcript = line.substr(tab2 + 1);
      if (transcript.find('\t') != std::string::npos) {
        throw ParseError("manifest: line " + std::to_string(line_no) +
                         ": unexpected extra tab-separated field");
      }
      std::istringstream words(transcript);
      std::string w;
      while (words >> w) record.transcript.push_back(std::move(w));
    }
    if (record.features_path.empty()) {
      throw ParseError("manifest: line " + std::to_string(line_no) +
                       ": empty features path");
    }
    for (unsigned char c : record.id) {
      if (std::isspace(c)) {
        throw ParseError("manifest: line " + std::to_string(line_no) +
                         ": id contains whitespace");
      }
    }

    const auto [it, fresh] = first_line_of_id.emplace(record.id, line_no);
    if (!fresh) {
      throw ParseError("manifest: duplicate id '" + record.id + "' on lines " +
                       std::to_string(it->second) + " and " +
                       std::to_string(line_no));
    }
    if (verify_paths) {
      const auto resolved = resolve_features_path(path, record);
      if (!std::filesystem::exists(resolved)) {
        throw ParseError("manifest: line " + std::to_string(line_no) +
                         ": features file not found: " + resolved.string());
      }
    }
    manifest.records.push_back(std::move(record));
  }
  return manifest;
}

void write_manifest(const std::filesystem::path& path,
                    const Manifest& manifest) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open manifest " + path.string() + " for writing");
  }
  for (const ManifestRecord& record : manifest.records) {
    out << record.id << '\t' << record.features_path;
    if (!record.transcript.empty()) {
      out << '\t';
      for (std::size_t i = 0; i < record.transcript.size(); ++i) {
        if (i > 0) out << ' ';
        out << record.transcript[i];
      }
    }
    out << '\n';
  }
  out.flush();
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

std::filesystem::path resolve_features_path(
    const std::filesystem::path& manifest_path, const ManifestRecord& record) {
  const std::filesystem::path features(record.features_path);
  if (features.is_absolute()) {
    return features;
  }
  return manifest_path.parent_path() / features;
}

Utterance load_utterance(const std::filesystem::path& manifest_path,
                         const ManifestRecord& record) {
  return Utterance(record.id,
                   read_featseq(resolve_features_path(manifest_path, record)),
                   record.transcript);
}

void render_pgm(const FeatureSequence& seq, std::ostream& out) {
  const auto values = seq.values();
  const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  const float lo = *min_it;
  const float hi = *max_it;
  const bool constant = !(hi > lo);

  out << "P5\n" << seq.frames() << ' ' << seq.dim() << "\n255\n";
  // Image rows are feature dimensions (dim 0 on top), columns are time.
  std::vector<unsigned char> row(seq.frames());
  for (std::size_t d = 0; d < seq.dim(); ++d) {
    for (std::size_t t = 0; t < seq.frames(); ++t) {
      if (constant) {
        row[t] = 128;
      } else {
        const double scaled =
            255.0 * (static_cast<double>(seq.at(t, d)) - lo) / (hi - lo);
        row[t] = static_cast<unsigned char>(std::lround(scaled));
      }
    }
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size()));
  }
}

void render_pgm(const FeatureSequence& seq, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  render_pgm(seq, out);
  out.flush();
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

}  // namespace seqaug
