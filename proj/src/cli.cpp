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

#include "seqaug/cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "seqaug/evalsim.hpp"
#include "seqaug/io.hpp"
#include "seqaug/presets.hpp"
#include "seqaug/stats.hpp"

namespace seqaug::cli {

namespace {

using nlohmann::json;

void require_known_keys(const json& object, std::initializer_list<const char*> known,
                        const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    bool ok = false;
    for (const char* k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw ConfigError("config: unknown key '" + key + "' in " + where);
    }
  }
}

LengthPerturbConfig parse_lenperturb(const json& section) {
  require_known_keys(section,
                     {"drop_prob", "drop_ratio", "max_drop_run", "insert_prob",
                      "insert_ratio", "max_insert_run", "min_out_frames"},
                     "lenperturb");
  LengthPerturbConfig cfg;
  cfg.drop_prob = section.value("drop_prob", 0.0);
  cfg.drop_ratio = section.value("drop_ratio", 0.0);
  cfg.max_drop_run = section.value("max_drop_run", 0);
  cfg.insert_prob = section.value("insert_prob", 0.0);
  cfg.insert_ratio = section.value("insert_ratio", 0.0);
  cfg.max_insert_run = section.value("max_insert_run", 0);
  cfg.min_out_frames = section.value("min_out_frames", 1);
  return cfg;
}

SmoothingConfig parse_smoothing(const json& section) {
  require_known_keys(section, {"epsilon", "max_hypotheses"}, "smoothing");
  SmoothingConfig cfg;
  cfg.epsilon = section.value("epsilon", 0.0);
  cfg.max_hypotheses = section.value("max_hypotheses", 1);
  return cfg;
}

std::optional<EpochRange> parse_range(const json& value, const char* name) {
  if (value.is_null()) {
    return std::nullopt;
  }
  if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
      !value[1].is_number_integer()) {
    throw ConfigError(std::string("config: schedule.") + name +
                      " must be [first_epoch, last_epoch] or null");
  }
  return EpochRange{value[0].get<int>(), value[1].get<int>()};
}

ScheduleSpec parse_schedule(const json& section) {
  require_known_keys(section, {"lenpb", "nbestls"}, "schedule");
  ScheduleSpec spec;
  if (section.contains("lenpb")) {
    spec.lenpb = parse_range(section.at("lenpb"), "lenpb");
  }
  if (section.contains("nbestls")) {
    spec.nbestls = parse_range(section.at("nbestls"), "nbestls");
  }
  return spec;
}

}  // namespace

ToolConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config " + path.string());
  }
  json doc;
  try {
    doc = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ParseError("config: " + std::string(e.what()));
  }
  if (!doc.is_object()) {
    throw ConfigError("config: top level must be a JSON object");
  }
  require_known_keys(doc, {"preset", "lenperturb", "smoothing", "schedule"},
                     "config");

  ToolConfig config;
  if (doc.contains("preset")) {
    const std::string name = doc.at("preset").get<std::string>();
    const Preset* preset = find_preset(name);
    if (preset == nullptr) {
      throw ConfigError("config: unknown preset '" + name + "'");
    }
    config.lenperturb = preset->lenperturb;
    config.smoothing = preset->smoothing;
    config.schedule = preset->schedule;
  }
  // Explicit sections replace the preset's section wholesale.
  if (doc.contains("lenperturb")) {
    config.lenperturb = parse_lenperturb(doc.at("lenperturb"));
  }
  if (doc.contains("smoothing")) {
    config.smoothing = parse_smoothing(doc.at("smoothing"));
  }
  if (doc.contains("schedule")) {
    config.schedule = parse_schedule(doc.at("schedule"));
  }

  config.lenperturb.validate();
  config.smoothing.validate();
  config.schedule.validate();
  return config;
}

namespace {

/// Shared error-to-exit-code mapping. Config problems exit 2, everything
/// else that throws exits 1.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

void check_id_is_filename_safe(const std::string& id) {
  if (id.find('/') != std::string::npos || id.find('\\') != std::string::npos ||
      id == "." || id == "..") {
    throw ParseError("utterance id is not a safe file name: '" + id + "'");
  }
}

}  // namespace

int run_perturb(const PerturbOptions& options, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&]() {
    const ToolConfig config = load_config(options.config);
    const Manifest manifest = read_manifest(options.manifest);

    std::vector<Utterance> utterances;
    utterances.reserve(manifest.records.size());
    for (const ManifestRecord& record : manifest.records) {
      check_id_is_filename_safe(record.id);
      utterances.push_back(load_utterance(options.manifest, record));
    }

    // This subcommand only perturbs features; smoothing (and its stream
    // draws) stays off regardless of the configured window.
    ScheduleSpec schedule = config.schedule;
    schedule.nbestls.reset();

    const NBestCollection no_hypotheses;
    EpochStats stats;
    const std::vector<Utterance> result = apply_epoch(
        utterances, options.epoch, config.lenperturb, config.smoothing,
        no_hypotheses, schedule, options.seed, options.threads, &stats);

    std::filesystem::create_directories(options.out_dir);
    Manifest out_manifest;
    std::size_t changed = 0;
    for (const Utterance& u : result) {
      const std::string filename = u.id + ".fseq";
      write_featseq(options.out_dir / filename, u.features);
      out_manifest.records.push_back(ManifestRecord{u.id, filename, u.labels});
    }
    for (std::size_t i = 0; i < result.size(); ++i) {
      if (result[i].features != utterances[i].features) {
        ++changed;
      }
    }
    write_manifest(options.out_dir / "manifest.tsv", out_manifest);

    out << "utterances=" << result.size() << " perturbed=" << changed
        << " lenpb_active="
        << (is_active(Technique::kLengthPerturb, options.epoch, schedule) ? 1
                                                                          : 0)
        << '\n';
    return kExitOk;
  });
}

int run_smooth(const SmoothOptions& options, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&]() {
    const ToolConfig config = load_config(options.config);
    const Manifest manifest = read_manifest(options.manifest);

    std::ifstream nbest_in(options.nbest);
    if (!nbest_in) {
      throw IoError("cannot open nbest file " + options.nbest.string());
    }
    const NBestCollection nbest = parse_nbest_file(nbest_in);

    const bool active =
        is_active(Technique::kLabelSmooth, options.epoch, config.schedule);

    // Features stay on disk; only transcripts are rewritten. The per-
    // utterance draw layout matches apply_epoch with perturbation off.
    Manifest out_manifest = manifest;
    std::atomic<std::size_t> replaced{0};
    std::atomic<std::size_t> missing{0};
    static const NBestSet kEmptySet{};
    if (active) {
      auto smooth_record = [&](ManifestRecord& record) {
        RandomStream rng =
            derive_stream(options.seed, record.id,
                          static_cast<std::uint64_t>(options.epoch));
        const NBestSet* set = nbest.find(record.id);
        if (set == nullptr) {
          ++missing;
          set = &kEmptySet;
        }
        SmoothOutcome outcome =
            smooth_select(record.transcript, *set, config.smoothing, rng);
        if (outcome.replaced) {
          ++replaced;
        }
        record.transcript = std::move(outcome.labels);
      };
      const int workers = std::max(1, options.threads);
      if (workers == 1 || out_manifest.records.size() < 2) {
        for (ManifestRecord& record : out_manifest.records) {
          smooth_record(record);
        }
      } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
          pool.emplace_back([&] {
            for (;;) {
              const std::size_t i = next.fetch_add(1);
              if (i >= out_manifest.records.size()) break;
              smooth_record(out_manifest.records[i]);
            }
          });
        }
      }
    }

    write_manifest(options.out, out_manifest);
    out << "replaced=" << replaced << " kept="
        << (out_manifest.records.size() - replaced)
        << " missing_nbest=" << missing << '\n';
    return kExitOk;
  });
}

int run_render(const std::filesystem::path& input,
               const std::filesystem::path& output, std::ostream& err) {
  return guarded(err, [&]() {
    render_pgm(read_featseq(input), output);
    return kExitOk;
  });
}

int run_stats(const std::filesystem::path& before_manifest,
              const std::filesystem::path& after_manifest, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&]() {
    auto lengths_of = [](const std::filesystem::path& manifest_path) {
      const Manifest manifest = read_manifest(manifest_path);
      std::vector<SequenceLength> lengths;
      lengths.reserve(manifest.records.size());
      for (const ManifestRecord& record : manifest.records) {
        const FeatureSequence seq =
            read_featseq(resolve_features_path(manifest_path, record));
        lengths.push_back(SequenceLength{record.id, seq.frames()});
      }
      return lengths;
    };
    const std::vector<SequenceLength> before = lengths_of(before_manifest);
    const std::vector<SequenceLength> after = lengths_of(after_manifest);
    out << format_report(length_report(before, after));
    return kExitOk;
  });
}

int run_simulate(std::size_t seeds, int epochs, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&]() {
    evalsim::TaskConfig task_cfg;
    evalsim::TrainOptions train;
    if (epochs > 0) {
      train.epochs = epochs;
    }
    LengthPerturbConfig lp;
    lp.drop_prob = 0.7;
    lp.drop_ratio = 0.1;
    lp.max_drop_run = 7;
    lp.insert_prob = 0.7;
    lp.insert_ratio = 0.1;
    lp.max_insert_run = 3;

    const evalsim::SimulationResult result =
        evalsim::run_simulation(seeds, task_cfg, lp, train);
    out << "seeds=" << result.outcomes.size() << '\n';
    for (const evalsim::SeedOutcome& o : result.outcomes) {
      std::ostringstream line;
      line.precision(4);
      line << std::fixed << "seed" << o.seed << ".baseline="
           << o.baseline_accuracy << '\n'
           << "seed" << o.seed << ".augmented=" << o.augmented_accuracy << '\n';
      out << line.str();
    }
    out << "wins=" << result.wins << '\n';
    return kExitOk;
  });
}

int run_selftest(std::size_t trials, std::uint64_t seed, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&]() {
    LengthPerturbConfig lp;
    lp.drop_prob = 0.7;
    lp.drop_ratio = 0.1;
    lp.max_drop_run = 7;
    lp.insert_prob = 0.7;
    lp.insert_ratio = 0.1;
    lp.max_insert_run = 3;
    SmoothingConfig sm{0.1, 20};

    const VerificationRecord record = verify_rates(trials, lp, sm, seed);
    out << format_report(record);
    return record.all_pass ? kExitOk : kExitRuntime;
  });
}

}  // namespace seqaug::cli
