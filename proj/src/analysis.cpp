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

#include "jumble/analysis.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "jumble/error.hpp"
#include "jumble/utf8.hpp"

namespace jumble {

std::string_view to_string(Check check) noexcept {
  switch (check) {
    case Check::EndpointsFixed: return "endpoints";
    case Check::MultisetEqual: return "multiset";
    case Check::WithinDistance: return "distance";
  }
  return "?";
}

std::optional<Check> parse_check(std::string_view name) noexcept {
  for (auto c : {Check::EndpointsFixed, Check::MultisetEqual, Check::WithinDistance}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

bool CheckSet::has(Check c) const noexcept {
  switch (c) {
    case Check::EndpointsFixed: return endpoints_fixed;
    case Check::MultisetEqual: return multiset_equal;
    case Check::WithinDistance: return max_distance.has_value();
  }
  return false;
}

std::vector<Check> WordVerdict::failed() const {
  std::vector<Check> out;
  for (Check c : checks) {
    if (std::find(passed.begin(), passed.end(), c) == passed.end()) out.push_back(c);
  }
  return out;
}

namespace {

std::vector<std::string> aligned_words(std::span<const Token> original,
                                       std::span<const Token> candidate,
                                       std::vector<std::string>& candidate_words) {
  auto orig = words(original);
  candidate_words = words(candidate);
  if (orig.size() != candidate_words.size()) {
    const std::size_t at = std::min(orig.size(), candidate_words.size());
    throw AlignmentError(at, "word counts differ (" + std::to_string(orig.size()) + " vs " +
                                 std::to_string(candidate_words.size()) +
                                 "); first word without a counterpart is at index " +
                                 std::to_string(at));
  }
  return orig;
}

bool endpoints_fixed(const std::u32string& a, const std::u32string& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  return a.front() == b.front() && a.back() == b.back();
}

bool multiset_equal(std::u32string a, std::u32string b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

std::vector<WordVerdict> verify_pair(std::span<const Token> original,
                                     std::span<const Token> candidate, const CheckSet& checks) {
  std::vector<std::string> cand;
  const auto orig = aligned_words(original, candidate, cand);

  std::vector<WordVerdict> verdicts;
  verdicts.reserve(orig.size());
  for (std::size_t i = 0; i < orig.size(); ++i) {
    WordVerdict v;
    v.index = i;
    v.original = orig[i];
    v.candidate = cand[i];
    const std::u32string a = utf8::decode(orig[i]);
    const std::u32string b = utf8::decode(cand[i]);

    if (checks.endpoints_fixed) {
      v.checks.push_back(Check::EndpointsFixed);
      if (endpoints_fixed(a, b)) v.passed.push_back(Check::EndpointsFixed);
    }
    if (checks.multiset_equal) {
      v.checks.push_back(Check::MultisetEqual);
      if (multiset_equal(a, b)) v.passed.push_back(Check::MultisetEqual);
    }
    if (checks.max_distance) {
      v.checks.push_back(Check::WithinDistance);
      std::optional<std::size_t> d;
      if (checks.metric != Metric::Hamming || a.size() == b.size()) {
        const std::size_t raw = distance(a, b, checks.metric);
        if (raw <= checks.cap) d = raw;
      }
      v.measured_distance = d;
      if (d && *d <= *checks.max_distance) v.passed.push_back(Check::WithinDistance);
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

namespace {

void check_edit(const PerturbationTrace& t, ConstraintMode mode, const KeyboardLayout& layout,
                std::vector<std::string>& problems) {
  const std::u32string a = utf8::decode(t.original);
  const std::u32string b = utf8::decode(t.result);
  if (!t.op) {
    problems.push_back("edit trace without an op");
    return;
  }
  const EditOp& op = *t.op;
  if (!is_applicable(op, a)) {
    problems.push_back(describe(op) + " is not applicable to the original");
    return;
  }
  if (apply_op(op, a) != b) problems.push_back(describe(op) + " does not produce the result");
  if (osa(a, b) != 1) problems.push_back("OSA distance is " + std::to_string(osa(a, b)) + ", not 1");

  const bool fix_first =
      mode == ConstraintMode::FixFirst || mode == ConstraintMode::FixFirstLast;
  const bool fix_last = mode == ConstraintMode::FixFirstLast;
  if (fix_first && (b.empty() || a.front() != b.front())) {
    problems.push_back("first character not preserved");
  }
  if (fix_last && (b.empty() || a.back() != b.back())) {
    problems.push_back("last character not preserved");
  }
  if (mode == ConstraintMode::QwertyNeighbor && op.payload) {
    const char32_t anchor = op.kind == EditKind::Substitute ? a[op.position]
                            : op.position == 0             ? a.front()
                                                           : a[op.position - 1];
    if (!layout.adjacent(anchor, *op.payload)) {
      problems.push_back("payload '" + utf8::encode(*op.payload) + "' is not adjacent to '" +
                         utf8::encode(anchor) + "'");
    }
  }
}

}  // namespace

std::vector<TraceVerdict> verify_traces(std::span<const PerturbationTrace> traces,
                                        ConstraintMode mode, const KeyboardLayout& layout) {
  std::vector<TraceVerdict> out;
  for (const auto& t : traces) {
    TraceVerdict v;
    v.word_index = t.word_index;
    switch (t.kind) {
      case TraceKind::Edit:
        check_edit(t, mode, layout, v.problems);
        break;
      case TraceKind::Jumble: {
        const std::u32string a = utf8::decode(t.original);
        const std::u32string b = utf8::decode(t.result);
        if (!endpoints_fixed(a, b)) v.problems.push_back("endpoints not preserved");
        if (!multiset_equal(a, b)) v.problems.push_back("character multiset changed");
        if (a == b && t.reason.empty()) v.problems.push_back("jumble left the word unchanged");
        break;
      }
      case TraceKind::Skipped:
        if (t.original != t.result) v.problems.push_back("skipped word was modified");
        break;
    }
    out.push_back(std::move(v));
  }
  return out;
}

CorpusStats corpus_stats(std::span<const Token> original, std::span<const Token> candidate,
                         Metric metric) {
  std::vector<std::string> cand;
  const auto orig = aligned_words(original, candidate, cand);
  CorpusStats stats;
  stats.word_count = orig.size();
  for (std::size_t i = 0; i < orig.size(); ++i) {
    if (orig[i] == cand[i]) ++stats.unchanged_count;
    ++stats.distance_histogram[distance(std::string_view(orig[i]), std::string_view(cand[i]),
                                        metric)];
  }
  stats.unchanged_fraction =
      stats.word_count == 0 ? 0.0
                            : static_cast<double>(stats.unchanged_count) / stats.word_count;
  return stats;
}

std::vector<TrialSummary> aggregate_trials(std::span<const TrialRecord> records) {
  if (records.empty()) throw ValidationError("no trial records to aggregate");

  std::set<std::tuple<std::string, std::string, std::size_t>> seen;
  std::map<std::string, TrialSummary> by_condition;
  for (const auto& r : records) {
    if (r.elapsed_ms <= 0) {
      throw ValidationError("record for reader '" + r.reader_id + "', condition '" +
                            r.condition + "' has non-positive elapsed_ms " +
                            std::to_string(r.elapsed_ms));
    }
    if (!seen.emplace(r.reader_id, r.condition, r.text_index).second) {
      throw ValidationError("duplicate submission: reader '" + r.reader_id + "', condition '" +
                            r.condition + "', text " + std::to_string(r.text_index));
    }
    auto& summary = by_condition[r.condition];
    summary.condition = r.condition;
    summary.per_reader[r.reader_id] += r.elapsed_ms;
  }

  std::vector<TrialSummary> out;
  for (auto& [name, summary] : by_condition) {
    summary.reader_count = summary.per_reader.size();
    std::int64_t total = 0;
    for (const auto& [reader, ms] : summary.per_reader) total += ms;
    summary.mean_time_ms = static_cast<double>(total) / static_cast<double>(summary.reader_count);
    out.push_back(std::move(summary));
  }
  return out;
}

}  // namespace jumble
