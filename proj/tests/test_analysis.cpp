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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "jumble/analysis.hpp"
#include "jumble/error.hpp"
#include "jumble/perturb.hpp"
#include "jumble/resources.hpp"
#include "jumble/utf8.hpp"

namespace jumble {
namespace {

std::vector<Token> corpus(std::string_view name) { return tokenize(resource(name)); }

CheckSet jumble_checks() {
  CheckSet c;
  c.endpoints_fixed = true;
  c.multiset_equal = true;
  return c;
}

CheckSet distance_checks(std::size_t max = 1) {
  CheckSet c;
  c.max_distance = max;
  return c;
}

TEST(VerifyPair, ReflexiveIsAllPass) {
  const auto t = corpus("corpus/paragraph_original.txt");
  CheckSet all = jumble_checks();
  all.max_distance = 0;
  for (const auto& v : verify_pair(t, t, all)) {
    EXPECT_TRUE(v.ok());
    ASSERT_TRUE(v.measured_distance.has_value());
    EXPECT_EQ(*v.measured_distance, 0u);
  }
}

TEST(VerifyPair, CirculatedParagraphBreaksItsOwnRule) {
  const auto verdicts = verify_pair(corpus("corpus/intro_original.txt"),
                                    corpus("corpus/intro_jumbled.txt"), jumble_checks());
  std::set<std::string> multiset_failures;
  for (const auto& v : verdicts) {
    const auto failed = v.failed();
    if (std::find(failed.begin(), failed.end(), Check::MultisetEqual) != failed.end()) {
      multiset_failures.insert(v.candidate);
    }
  }
  EXPECT_TRUE(multiset_failures.contains("rscheearch"));
  EXPECT_TRUE(multiset_failures.contains("mtttaer"));
  EXPECT_TRUE(multiset_failures.contains("iprmoetnt"));
  EXPECT_EQ(multiset_failures.size(), 3u);
}

TEST(VerifyPair, MismatchedWordCountsNameTheIndex) {
  // The published distance-1 paragraph splits "itself" into "it slf".
  const auto original = corpus("corpus/paragraph_original.txt");
  const auto candidate = corpus("corpus/paragraph_edit1.txt");
  try {
    verify_pair(original, candidate, distance_checks());
    FAIL() << "expected AlignmentError";
  } catch (const AlignmentError& e) {
    EXPECT_EQ(e.index(), 67u);
  }
}

TEST(VerifyPair, RepairedDistanceOneParagraphIsWithinOne) {
  std::string text(resource("corpus/paragraph_edit1.txt"));
  text.replace(text.find("it slf"), 6, "itslf");
  const auto verdicts =
      verify_pair(corpus("corpus/paragraph_original.txt"), tokenize(text), distance_checks());
  std::vector<std::string> violations;
  for (const auto& v : verdicts) {
    if (!v.ok()) violations.push_back(v.candidate);
  }
  EXPECT_EQ(verdicts.size(), 67u);
  // Once the split word is rejoined every pair sits at distance 1 or less.
  EXPECT_TRUE(violations.empty()) << violations.front();
}

TEST(VerifyPair, ReportsExceedsCap) {
  CheckSet c = distance_checks();
  c.cap = 2;
  const auto v = verify_pair(tokenize("abcdef"), tokenize("fedcba"), c);
  ASSERT_TRUE(v[0].measured_distance.has_value());
  EXPECT_FALSE(v[0].measured_distance->has_value());
  EXPECT_FALSE(v[0].ok());
}

TEST(VerifyPair, HammingUnequalLengthsFailsWithoutThrowing) {
  CheckSet c = distance_checks();
  c.metric = Metric::Hamming;
  const auto v = verify_pair(tokenize("monkey"), tokenize("monkeys"), c);
  EXPECT_FALSE(v[0].ok());
  EXPECT_FALSE(v[0].measured_distance->has_value());
}

TEST(VerifyPair, LongWordsNeverError) {
  const std::string a(300, 'a');
  const std::string b = a + "b";
  const auto v = verify_pair(tokenize(a), tokenize(b), distance_checks());
  EXPECT_TRUE(v[0].ok());
}

TEST(CorpusStats, IdenticalTexts) {
  const auto t = corpus("corpus/words100.txt");
  const auto s = corpus_stats(t, t, Metric::Osa);
  EXPECT_EQ(s.word_count, 100u);
  EXPECT_EQ(s.unchanged_count, 100u);
  EXPECT_DOUBLE_EQ(s.unchanged_fraction, 1.0);
  EXPECT_EQ(s.distance_histogram, (std::map<std::size_t, std::size_t>{{0, 100}}));
}

TEST(CorpusStats, CirculatedParagraph) {
  const auto s = corpus_stats(corpus("corpus/intro_original.txt"),
                              corpus("corpus/intro_jumbled.txt"), Metric::Osa);
  EXPECT_EQ(s.word_count, 69u);
  EXPECT_EQ(s.unchanged_count, 32u);
  EXPECT_GE(s.unchanged_fraction, 0.45);
  EXPECT_LE(s.unchanged_fraction, 0.50);
  EXPECT_EQ(s.distance_histogram.at(0), s.unchanged_count);
}

TEST(CorpusStats, FreshJumbleOfFixture) {
  const auto t = corpus("corpus/words100.txt");
  // Independent count: a word survives a jumble only if its interior cannot change.
  std::size_t expected_unchanged = 0;
  for (const auto& w : words(t)) {
    const std::u32string s = utf8::decode(w);
    const bool short_word = s.size() <= 3;
    const bool uniform = s.size() >= 2 && std::all_of(s.begin() + 1, s.end() - 1,
                                                      [&](char32_t c) { return c == s[1]; });
    expected_unchanged += short_word || uniform;
  }
  EXPECT_EQ(expected_unchanged, 0u);  // every fixture word is at least 4 letters

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    PerturbSpec spec;
    spec.seed = seed;
    const auto r = perturb_text(t, spec, KeyboardLayout::qwerty(), Generator::Jumble);
    const auto s = corpus_stats(t, r.tokens, Metric::Osa);
    EXPECT_EQ(s.unchanged_count, expected_unchanged);
    std::size_t total = 0;
    for (const auto& [d, n] : s.distance_histogram) total += n;
    EXPECT_EQ(total, s.word_count);
  }
}

TEST(CorpusStats, MixedShortWordsCountAsUnchanged) {
  const auto t = tokenize("to be a moon dodo research");
  PerturbSpec spec;
  const auto r = perturb_text(t, spec, KeyboardLayout::qwerty(), Generator::Jumble);
  // "to", "be", "a" are short; "moon" has interior "oo"; "dodo" and "research" change.
  EXPECT_EQ(corpus_stats(t, r.tokens, Metric::Osa).unchanged_count, 4u);
}

TEST(CorpusStats, AlignmentAndHammingErrors) {
  EXPECT_THROW(corpus_stats(tokenize("a b"), tokenize("a"), Metric::Osa), AlignmentError);
  EXPECT_THROW(corpus_stats(tokenize("ab"), tokenize("abc"), Metric::Hamming), ValidationError);
}

TrialRecord rec(std::string reader, std::string condition, std::int64_t ms,
                std::size_t text = 0) {
  return TrialRecord{"b", std::move(reader), std::move(condition), text, ms, ""};
}

TEST(AggregateTrials, TwoReaders) {
  const std::vector<TrialRecord> records{rec("r1", "c", 4000), rec("r2", "c", 6000)};
  const auto s = aggregate_trials(records);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].reader_count, 2u);
  EXPECT_EQ(s[0].mean_time_ms, 5000.0);
}

TEST(AggregateTrials, TenReadersFourConditions) {
  std::vector<TrialRecord> records;
  const std::vector<std::string> conditions{"d", "c", "b", "a"};
  for (int r = 0; r < 10; ++r) {
    for (std::size_t c = 0; c < conditions.size(); ++c) {
      records.push_back(rec("reader" + std::to_string(r), conditions[c],
                            1000 * static_cast<std::int64_t>(c + 1) + 100 * r));
    }
  }
  const auto s = aggregate_trials(records);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0].condition, "a");
  for (const auto& summary : s) EXPECT_EQ(summary.reader_count, 10u);
  // Condition at position c has times 1000(c+1) + {0..900}: mean 1000(c+1) + 450.
  EXPECT_EQ(s[0].mean_time_ms, 4450.0);
  EXPECT_EQ(s[3].mean_time_ms, 1450.0);
}

TEST(AggregateTrials, MultipleTextsSumPerReader) {
  const std::vector<TrialRecord> records{rec("r1", "c", 1000, 0), rec("r1", "c", 2000, 1),
                                         rec("r2", "c", 5000, 0)};
  const auto s = aggregate_trials(records);
  EXPECT_EQ(s[0].per_reader.at("r1"), 3000);
  EXPECT_EQ(s[0].mean_time_ms, 4000.0);
}

TEST(AggregateTrials, Errors) {
  EXPECT_THROW(aggregate_trials({}), ValidationError);
  const std::vector<TrialRecord> dup{rec("r1", "c", 10), rec("r1", "c", 20)};
  EXPECT_THROW(aggregate_trials(dup), ValidationError);
  const std::vector<TrialRecord> zero{rec("r1", "c", 0)};
  EXPECT_THROW(aggregate_trials(zero), ValidationError);
}

TEST(AggregateTrials, MeanIsPermutationInvariant) {
  std::vector<TrialRecord> records;
  for (int r = 0; r < 7; ++r) {
    for (int c = 0; c < 3; ++c) {
      records.push_back(rec("r" + std::to_string(r), "c" + std::to_string(c), 997 * r + 13 * c + 1));
    }
  }
  const auto baseline = aggregate_trials(records);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    std::shuffle(records.begin(), records.end(), rng);
    const auto s = aggregate_trials(records);
    ASSERT_EQ(s.size(), baseline.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      EXPECT_EQ(s[k].mean_time_ms, baseline[k].mean_time_ms);
      EXPECT_EQ(s[k].per_reader, baseline[k].per_reader);
    }
  }
}

TEST(VerifyTraces, CatchesTamperedTraces) {
  const auto layout = KeyboardLayout::qwerty();
  PerturbationTrace t{0, "basis", "badis", TraceKind::Edit, EditOp::substitute(2, U'd'), ""};
  EXPECT_TRUE(verify_traces(std::span(&t, 1), ConstraintMode::QwertyNeighbor, layout)[0].ok());

  PerturbationTrace far = t;
  far.op = EditOp::substitute(2, U'p');
  far.result = "bapis";
  EXPECT_FALSE(verify_traces(std::span(&far, 1), ConstraintMode::QwertyNeighbor, layout)[0].ok());
  EXPECT_TRUE(verify_traces(std::span(&far, 1), ConstraintMode::Unconstrained, layout)[0].ok());

  PerturbationTrace first{0, "lost", "post", TraceKind::Edit, EditOp::substitute(0, U'p'), ""};
  EXPECT_FALSE(verify_traces(std::span(&first, 1), ConstraintMode::FixFirst, layout)[0].ok());

  PerturbationTrace wrong{0, "lost", "lots", TraceKind::Edit, EditOp::transpose(1), ""};
  EXPECT_FALSE(verify_traces(std::span(&wrong, 1), ConstraintMode::Unconstrained, layout)[0].ok());

  PerturbationTrace jumble{0, "word", "wodr", TraceKind::Jumble, std::nullopt, ""};
  EXPECT_FALSE(verify_traces(std::span(&jumble, 1), ConstraintMode::Unconstrained, layout)[0].ok());

  PerturbationTrace skipped{0, "to", "ot", TraceKind::Skipped, std::nullopt, "below-min-word-len"};
  EXPECT_FALSE(verify_traces(std::span(&skipped, 1), ConstraintMode::Unconstrained, layout)[0].ok());
}

}  // namespace
}  // namespace jumble
