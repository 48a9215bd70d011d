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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "seqaug/io.hpp"
#include "seqaug/random.hpp"

using namespace seqaug;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("seqaug-cli-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static inline int counter = 0;
};

int run(const std::string& args) {
  const std::string command =
      std::string(SEQAUG_CLI_PATH) + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string run_capture(const std::string& args, const fs::path& capture) {
  const std::string command = std::string(SEQAUG_CLI_PATH) + " " + args +
                              " >" + capture.string() + " 2>/dev/null";
  const int status = std::system(command.c_str());
  REQUIRE(WEXITSTATUS(status) == 0);
  std::ifstream in(capture);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string file_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

/// A small corpus on disk: manifest + FSEQ files + nbest file + config.
struct Fixture {
  TempDir dir;
  fs::path manifest;
  fs::path nbest;
  fs::path config;

  explicit Fixture(const std::string& config_json, int utterances = 24) {
    manifest = dir.path / "manifest.tsv";
    nbest = dir.path / "hyps.nbest";
    config = dir.path / "config.json";

    std::ofstream mf(manifest);
    std::ofstream nb(nbest);
    for (int i = 0; i < utterances; ++i) {
      const std::string id = "utt" + std::to_string(i);
      RandomStream rng = derive_stream(400, id, 0);
      const auto frames =
          static_cast<std::size_t>(rng.next_int_inclusive(20, 60));
      std::vector<float> values;
      for (std::size_t v = 0; v < frames * 4; ++v) {
        values.push_back(static_cast<float>(rng.next_unit_real() * 2.0 - 1.0));
      }
      write_featseq(dir.path / (id + ".fseq"),
                    FeatureSequence(values, frames, 4));
      mf << id << '\t' << id << ".fseq" << "\tsome reference words\n";
      for (int r = 1; r <= 5; ++r) {
        nb << id << '\t' << r << "\talternative transcript " << r << '\n';
      }
    }
    mf.close();
    nb.close();
    std::ofstream(config) << config_json;
  }
};

}  // namespace

TEST_CASE("perturb runs end to end and is reproducible") {
  Fixture fx(R"({"preset": "swb-lenpb-only"})");
  const fs::path out1 = fx.dir.path / "out1";
  const fs::path out2 = fx.dir.path / "out2";
  REQUIRE(run("perturb --manifest " + fx.manifest.string() + " --out-dir " +
              out1.string() + " --config " + fx.config.string() +
              " --epoch 3 --seed 7") == 0);
  REQUIRE(run("perturb --manifest " + fx.manifest.string() + " --out-dir " +
              out2.string() + " --config " + fx.config.string() +
              " --epoch 3 --seed 7") == 0);

  CHECK(file_bytes(out1 / "manifest.tsv") == file_bytes(out2 / "manifest.tsv"));
  for (const auto& entry : fs::directory_iterator(out1)) {
    CHECK(file_bytes(entry.path()) ==
          file_bytes(out2 / entry.path().filename()));
  }
}

TEST_CASE("perturb with an inactive epoch copies features bit-exactly") {
  Fixture fx(R"({"preset": "swb-lenpb-only"})");
  const fs::path out = fx.dir.path / "out";
  REQUIRE(run("perturb --manifest " + fx.manifest.string() + " --out-dir " +
              out.string() + " --config " + fx.config.string() +
              " --epoch 26 --seed 7") == 0);
  const Manifest m = read_manifest(fx.manifest);
  for (const ManifestRecord& record : m.records) {
    CHECK(file_bytes(fx.dir.path / record.features_path) ==
          file_bytes(out / (record.id + ".fseq")));
  }
}

TEST_CASE("perturb thread count does not change output bytes") {
  Fixture fx(R"({"preset": "swb-lenpb-only"})");
  const fs::path one = fx.dir.path / "t1";
  const fs::path eight = fx.dir.path / "t8";
  REQUIRE(run("perturb --manifest " + fx.manifest.string() + " --out-dir " +
              one.string() + " --config " + fx.config.string() +
              " --epoch 5 --seed 11 --threads 1") == 0);
  REQUIRE(run("perturb --manifest " + fx.manifest.string() + " --out-dir " +
              eight.string() + " --config " + fx.config.string() +
              " --epoch 5 --seed 11 --threads 8") == 0);
  for (const auto& entry : fs::directory_iterator(one)) {
    CHECK(file_bytes(entry.path()) ==
          file_bytes(eight / entry.path().filename()));
  }
}

TEST_CASE("smooth writes the replacement summary") {
  Fixture fx(R"({"preset": "swb-combo"})");
  const fs::path out_manifest = fx.dir.path / "smoothed.tsv";
  const std::string stdout_text = run_capture(
      "smooth --manifest " + fx.manifest.string() + " --nbest " +
          fx.nbest.string() + " --config " + fx.config.string() +
          " --epoch 3 --seed 9 --out " + out_manifest.string(),
      fx.dir.path / "stdout.txt");
  CHECK(stdout_text.find("replaced=") != std::string::npos);
  CHECK(stdout_text.find("kept=") != std::string::npos);
  CHECK(stdout_text.find("missing_nbest=0") != std::string::npos);
  CHECK(fs::exists(out_manifest));
}

TEST_CASE("smooth with epsilon zero keeps every transcript") {
  Fixture fx(R"({"smoothing": {"epsilon": 0.0, "max_hypotheses": 5},
                 "schedule": {"nbestls": [1, 30]}})");
  const fs::path out_manifest = fx.dir.path / "smoothed.tsv";
  const std::string stdout_text = run_capture(
      "smooth --manifest " + fx.manifest.string() + " --nbest " +
          fx.nbest.string() + " --config " + fx.config.string() +
          " --epoch 3 --seed 9 --out " + out_manifest.string(),
      fx.dir.path / "stdout.txt");
  CHECK(stdout_text.find("replaced=0") != std::string::npos);
  CHECK(file_bytes(out_manifest) == file_bytes(fx.manifest));
}

TEST_CASE("render produces a pgm image") {
  Fixture fx(R"({"preset": "swb-lenpb-only"})", 1);
  const fs::path pgm = fx.dir.path / "out.pgm";
  REQUIRE(run("render --in " + (fx.dir.path / "utt0.fseq").string() +
              " --out " + pgm.string()) == 0);
  const std::string bytes = file_bytes(pgm);
  CHECK(bytes.substr(0, 3) == "P5\n");
}

TEST_CASE("stats reports deltas between two manifests") {
  Fixture fx(R"({"preset": "swb-lenpb-only"})", 8);
  const fs::path out = fx.dir.path / "out";
  REQUIRE(run("perturb --manifest " + fx.manifest.string() + " --out-dir " +
              out.string() + " --config " + fx.config.string() +
              " --epoch 1 --seed 3") == 0);
  const std::string report = run_capture(
      "stats --before " + fx.manifest.string() + " --after " +
          (out / "manifest.tsv").string(),
      fx.dir.path / "stats.txt");
  CHECK(report.find("count=8") != std::string::npos);
  CHECK(report.find("mean_delta=") != std::string::npos);
}

TEST_CASE("bad inputs map to the documented exit codes") {
  Fixture fx(R"({"preset": "swb-lenpb-only"})", 1);
  SUBCASE("missing manifest exits 1") {
    CHECK(run("perturb --manifest /nonexistent/m.tsv --out-dir " +
              (fx.dir.path / "o").string() + " --config " +
              fx.config.string() + " --epoch 1 --seed 1") == 1);
  }
  SUBCASE("unknown preset exits 2") {
    std::ofstream(fx.config) << R"({"preset": "swb-typo"})";
    CHECK(run("perturb --manifest " + fx.manifest.string() + " --out-dir " +
              (fx.dir.path / "o").string() + " --config " +
              fx.config.string() + " --epoch 1 --seed 1") == 2);
  }
  SUBCASE("out-of-range probability exits 2") {
    std::ofstream(fx.config)
        << R"({"lenperturb": {"drop_prob": 1.5, "drop_ratio": 0.1,
               "max_drop_run": 2}})";
    CHECK(run("perturb --manifest " + fx.manifest.string() + " --out-dir " +
              (fx.dir.path / "o").string() + " --config " +
              fx.config.string() + " --epoch 1 --seed 1") == 2);
  }
  SUBCASE("malformed config json exits 1") {
    std::ofstream(fx.config) << "{not json";
    CHECK(run("perturb --manifest " + fx.manifest.string() + " --out-dir " +
              (fx.dir.path / "o").string() + " --config " +
              fx.config.string() + " --epoch 1 --seed 1") == 1);
  }
  SUBCASE("unknown config key exits 2") {
    std::ofstream(fx.config) << R"({"lenprtrb": {"drop_prob": 0.5}})";
    CHECK(run("perturb --manifest " + fx.manifest.string() + " --out-dir " +
              (fx.dir.path / "o").string() + " --config " +
              fx.config.string() + " --epoch 1 --seed 1") == 2);
  }
}

TEST_CASE("selftest passes on defaults") {
  TempDir tmp;
  const std::string report =
      run_capture("selftest --trials 20000", tmp.path / "selftest.txt");
  CHECK(report.find("all_pass=1") != std::string::npos);
}

TEST_CASE("simulate prints per-seed accuracies and the win count") {
  TempDir tmp;
  const std::string report = run_capture("simulate --seeds 2 --epochs 40",
                                         tmp.path / "simulate.txt");
  CHECK(report.find("seeds=2") != std::string::npos);
  CHECK(report.find("seed1.baseline=") != std::string::npos);
  CHECK(report.find("seed2.augmented=") != std::string::npos);
  CHECK(report.find("wins=") != std::string::npos);
}
