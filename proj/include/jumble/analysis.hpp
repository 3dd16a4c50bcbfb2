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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jumble/distance.hpp"
#include "jumble/keyboard.hpp"
#include "jumble/perturb.hpp"
#include "jumble/text_model.hpp"

namespace jumble {

enum class Check { EndpointsFixed, MultisetEqual, WithinDistance };

std::string_view to_string(Check check) noexcept;
/// Accepts "endpoints", "multiset", "distance".
std::optional<Check> parse_check(std::string_view name) noexcept;

struct CheckSet {
  bool endpoints_fixed = false;
  bool multiset_equal = false;
  /// WithinDistance(max_distance, metric) when set.
  std::optional<std::size_t> max_distance;
  Metric metric = Metric::Osa;
  /// Distances above this are reported as "exceeds cap". The DP itself has
  /// no length limit; the cap only shapes the report.
  std::size_t cap = 4;

  bool has(Check c) const noexcept;
};

struct WordVerdict {
  std::size_t index = 0;
  std::string original;
  std::string candidate;
  std::vector<Check> checks;
  std::vector<Check> passed;
  /// Present whenever WithinDistance was checked; nullopt inside means the
  /// distance exceeds the cap (or is undefined, e.g. Hamming on unequal
  /// lengths).
  std::optional<std::optional<std::size_t>> measured_distance;

  bool ok() const noexcept { return passed.size() == checks.size(); }
  std::vector<Check> failed() const;
};

/// One verdict per positionally aligned word pair. Throws AlignmentError when
/// the Word-token counts differ.
std::vector<WordVerdict> verify_pair(std::span<const Token> original,
                                     std::span<const Token> candidate, const CheckSet& checks);

/// Outcome of re-checking one PerturbationTrace.
struct TraceVerdict {
  std::size_t word_index = 0;
  std::vector<std::string> problems;  // empty when the trace is sound

  bool ok() const noexcept { return problems.empty(); }
};

/// Re-checks generator output against its recipe, independently of the
/// generator: an Edit must reproduce `result` from `original`, sit at OSA
/// distance 1 and respect `mode` (and `layout` adjacency in QWERTY mode); a
/// Jumble must keep both endpoints and the scalar multiset; a Skipped word
/// must be unchanged.
std::vector<TraceVerdict> verify_traces(std::span<const PerturbationTrace> traces,
                                        ConstraintMode mode, const KeyboardLayout& layout);

struct CorpusStats {
  std::size_t word_count = 0;
  std::size_t unchanged_count = 0;  // case-sensitive exact equality
  double unchanged_fraction = 0.0;
  std::map<std::size_t, std::size_t> distance_histogram;
};

/// Throws AlignmentError on mismatched word counts and ValidationError for
/// Hamming on an unequal-length pair. An empty text gives fraction 0.
CorpusStats corpus_stats(std::span<const Token> original, std::span<const Token> candidate,
                         Metric metric);

/// One timed reading of one text by one reader.
struct TrialRecord {
  std::string bundle_id;
  std::string reader_id;
  std::string condition;
  std::size_t text_index = 0;
  std::int64_t elapsed_ms = 0;
  std::string recorded_at;  // ISO-8601, informational
};

struct TrialSummary {
  std::string condition;
  std::size_t reader_count = 0;
  double mean_time_ms = 0.0;
  /// A reader's time for a condition is the sum over that condition's texts.
  std::map<std::string, std::int64_t> per_reader;
};

/// Mean reading time per condition, ordered by condition name. Throws
/// ValidationError on empty input, non-positive elapsed_ms, or a repeated
/// (reader, condition, text) triple.
std::vector<TrialSummary> aggregate_trials(std::span<const TrialRecord> records);

}  // namespace jumble
