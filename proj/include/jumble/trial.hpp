// Copyright 2026 The jumbletext Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "jumble/analysis.hpp"
#include "jumble/perturb.hpp"

namespace jumble::trial {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kPaperExperimentsPreset = "paper-experiments";

enum class Presentation { FixedOrder, ShuffledPerReader };

std::string_view to_string(Presentation p) noexcept;
std::optional<Presentation> parse_presentation(std::string_view name) noexcept;

/// One transformation applied to a condition's source text.
struct PipelineStep {
  enum class Kind { Strip, Jumble, Edit1 };

  Kind kind = Kind::Jumble;
  std::string lexicon = "paragraph";  // Strip: "paragraph", "default" or a file path
  ConstraintMode mode = ConstraintMode::Unconstrained;  // Edit1
  std::string layout = "qwerty";      // Edit1: "qwerty" or a file path
  std::size_t min_word_len = 4;
  std::uint64_t seed = 0;
};

struct Condition {
  std::string name;
  std::string description;
  std::vector<std::string> sources;
  std::vector<PipelineStep> pipeline;
  std::vector<std::string> texts;
};

struct Provenance {
  std::string source_sha256;
  std::uint64_t seed = 0;
  std::string tool_version;
};

struct TrialBundle {
  std::string bundle_id;
  Presentation presentation = Presentation::FixedOrder;
  Provenance created_from;
  std::vector<Condition> conditions;

  const Condition* find(std::string_view condition) const;
};

nlohmann::json to_json(const TrialBundle& bundle);

/// Validates against trial_bundle.schema.json. Errors name the failing field
/// as a JSON path, e.g. `conditions[1].texts`.
TrialBundle bundle_from_json(const nlohmann::json& doc);

/// Runs `pipeline` over `text`. Relative lexicon/layout paths resolve against
/// `base_dir`.
std::string apply_pipeline(std::string_view text, std::span<const PipelineStep> pipeline,
                           const std::filesystem::path& base_dir = {});

/// Config describing the paper-experiments preset: the reference paragraph
/// with and without function words, jumbled and not; the 100-word list
/// jumbled and not; and distance-1 edits under all four constraint modes.
nlohmann::json paper_experiments_config(std::uint64_t seed);

/// Builds a bundle from a config document:
///
///   {"schema_version": 1, "preset": "paper-experiments", "seed": 7}
///
/// or explicit sources and conditions:
///
///   {"schema_version": 1, "seed": 7, "presentation": "shuffled_per_reader",
///    "sources": {"p": {"file": "p.txt"}, "w": {"builtin": "corpus/words100.txt"},
///                "s": {"text": "inline"}},
///    "conditions": [{"name": "p-jumbled", "sources": ["p"],
///                    "pipeline": [{"step": "jumble"}]}]}
///
/// The bundle id and source hash are derived from content, so the same config
/// always yields the same bundle.
TrialBundle make_bundle(const nlohmann::json& config, const std::filesystem::path& base_dir = {});

/// One reader's exported results.
struct TrialResults {
  std::string bundle_id;
  std::string reader_id;
  std::vector<TrialRecord> records;
};

nlohmann::json to_json(const TrialResults& results);

/// Validates against trial_results.schema.json, including that every record
/// repeats the file's bundle_id and reader_id.
TrialResults results_from_json(const nlohmann::json& doc);

/// Checks records against the bundle they claim to belong to: bundle id,
/// condition name and text index. Throws ValidationError.
void check_against_bundle(const TrialResults& results, const TrialBundle& bundle);

nlohmann::json summaries_to_json(std::string_view bundle_id,
                                 std::span<const TrialSummary> summaries);
/// `condition,reader_count,mean_time_ms` rows under a header line.
std::string summaries_to_csv(std::span<const TrialSummary> summaries);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace jumble::trial
