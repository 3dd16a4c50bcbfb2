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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "jumble/cli.hpp"
#include "jumble/resources.hpp"
#include "jumble/text_model.hpp"
#include "jumble/utf8.hpp"

namespace jumble::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("jumble_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, std::string_view content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string fixture(const std::string& name) {
    return write(fs::path(name).filename().string(), resource(name));
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, Distance) {
  EXPECT_EQ(invoke({"distance", "Sunday", "Monday", "--metric", "levenshtein"}).out, "2\n");
  EXPECT_EQ(invoke({"distance", "lost", "lots", "--metric", "osa"}).out, "1\n");
  EXPECT_EQ(invoke({"distance", "abc", "abc", "--metric", "hamming"}).out, "0\n");
  EXPECT_EQ(invoke({"distance", "ca", "abc", "--metric", "dl"}).out, "2\n");
  EXPECT_EQ(invoke({"distance", "Sunday", "sunday", "--ignore-case"}).out, "0\n");
}

TEST_F(CliTest, DistanceErrorsExitTwo) {
  const auto r = invoke({"distance", "ab", "abc", "--metric", "hamming"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("equal lengths"), std::string::npos);
  EXPECT_EQ(invoke({"distance", "a", "b", "--metric", "jaro"}).code, kExitValidation);
  EXPECT_EQ(invoke({"distance", "a"}).code, kExitValidation);
  EXPECT_EQ(invoke({}).code, kExitValidation);
}

TEST_F(CliTest, JumbleIsDeterministic) {
  const std::string words = fixture("corpus/words100.txt");
  const auto a = invoke({"perturb", words, "--generator", "jumble", "--seed", "7"});
  const auto b = invoke({"perturb", words, "--generator", "jumble", "--seed", "7"});
  const auto alias = invoke({"jumble", words, "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, alias.out);
  EXPECT_NE(a.out, resource("corpus/words100.txt"));
}

TEST_F(CliTest, PerturbReadsStdinAndPreservesLayout) {
  const auto r = invoke({"perturb", "--seed", "1"}, "Hello,  wonderful\nworld!\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(r.out.size() - 2), "!\n");
  EXPECT_NE(r.out.find(",  "), std::string::npos);
}

TEST_F(CliTest, PerturbTraceVerifies) {
  const std::string intro = fixture("corpus/paragraph_original.txt");
  const std::string trace = path("trace.json");
  const auto r = invoke({"perturb", intro, "--generator", "edit1", "--mode", "fix-first-last",
                         "--seed", "1", "--trace", trace});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(slurp(trace));
  EXPECT_EQ(doc["seed"], 1);
  EXPECT_EQ(doc["mode"], "fix-first-last");
  EXPECT_EQ(doc["traces"].size(), 67u);

  const auto v = invoke({"verify", "--trace", trace, "--strict"});
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_TRUE(json::parse(v.out)["all_passed"].get<bool>());

  // Tampering with one result is caught.
  json bad = doc;
  for (auto& t : bad["traces"]) {
    if (t["kind"] == "edit") {
      t["result"] = t["original"];
      break;
    }
  }
  const std::string bad_path = write("bad.json", bad.dump());
  EXPECT_EQ(invoke({"verify", "--trace", bad_path, "--strict"}).code, kExitValidation);
}

TEST_F(CliTest, PerturbedTextPassesWordLevelVerify) {
  const std::string intro = fixture("corpus/paragraph_original.txt");
  const std::string out = path("out.txt");
  ASSERT_EQ(invoke({"perturb", intro, "--mode", "fix-first-last", "--seed", "1", "-o", out}).code, 0);
  const auto v = invoke({"verify", intro, out, "--checks", "endpoints,distance", "--strict"});
  EXPECT_EQ(v.code, 0) << v.out;
  const json report = json::parse(v.out);
  EXPECT_EQ(report["word_count"], 67);
  EXPECT_TRUE(report["violations"].empty());
}

TEST_F(CliTest, AsymmetricLayoutIsRejected) {
  const std::string kbd = write("custom.kbd", "a: s\ns: d\nd: s\n");
  const std::string words = fixture("corpus/words100.txt");
  const auto r = invoke({"perturb", words, "--mode", "qwerty", "--layout", kbd});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("'a' lists 's'"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"perturb", words, "--layout", path("missing.kbd")}).code, kExitValidation);
}

TEST_F(CliTest, PerturbRejectsBadFlags) {
  const std::string words = fixture("corpus/words100.txt");
  EXPECT_EQ(invoke({"perturb", words, "--mode", "sideways"}).code, kExitValidation);
  EXPECT_EQ(invoke({"perturb", words, "--generator", "shuffle"}).code, kExitValidation);
  EXPECT_EQ(invoke({"perturb", words, "--min-word-len", "0"}).code, kExitValidation);
}

TEST_F(CliTest, StripReproducesReferenceParagraph) {
  const std::string original = fixture("corpus/paragraph_original.txt");
  const auto r = invoke({"strip", original, "--lexicon", "paragraph"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(utf8::fold(std::string_view(r.out)),
            utf8::fold(resource("corpus/paragraph_stripped.txt")));
}

TEST_F(CliTest, StripWithLexiconFile) {
  const std::string lex = write("lex.txt", "# none of these occur\nzebra\n");
  EXPECT_EQ(invoke({"strip", "--lexicon", lex}, "Keep every word, please.").out,
            "Keep every word please.\n");
  const std::string empty = write("empty.txt", "# nothing\n");
  EXPECT_EQ(invoke({"strip", "--lexicon", empty}, "x").code, kExitValidation);
}

TEST_F(CliTest, StripDefaultLexiconLeavesNoLexiconWords) {
  const auto r = invoke({"strip"}, std::string(resource("corpus/intro_original.txt")));
  ASSERT_EQ(r.code, 0);
  const auto lex = jumble::StopwordLexicon::builtin_default();
  for (const auto& w : jumble::words(jumble::tokenize(r.out))) EXPECT_FALSE(lex.contains(w)) << w;
}

TEST_F(CliTest, StatsOnCirculatedParagraph) {
  const std::string csv = path("hist.csv");
  const auto r = invoke({"stats", fixture("corpus/intro_original.txt"),
                         fixture("corpus/intro_jumbled.txt"), "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  const json report = json::parse(r.out);
  EXPECT_EQ(report["unchanged_count"], 32);
  EXPECT_TRUE(report["claimed_range"]["within"].get<bool>());
  EXPECT_EQ(slurp(csv).substr(0, 20), "distance,count\n0,32\n");
}

TEST_F(CliTest, IdenticalFilesAreAllPass) {
  const std::string words = fixture("corpus/words100.txt");
  const json stats = json::parse(invoke({"stats", words, words}).out);
  EXPECT_EQ(stats["unchanged_fraction"], 1.0);
  const json verify =
      json::parse(invoke({"verify", words, words, "--checks", "endpoints,multiset,distance"}).out);
  EXPECT_TRUE(verify["all_passed"].get<bool>());
  EXPECT_EQ(verify["passed_count"], 100);
}

TEST_F(CliTest, VerifyListsViolations) {
  const std::string original = fixture("corpus/words100.txt");
  const std::string candidate = fixture("corpus/words100_edit1_fix_first_last.txt");
  const auto r = invoke({"verify", original, candidate, "--checks", "endpoints,distance"});
  ASSERT_EQ(r.code, 0);
  const json report = json::parse(r.out);
  EXPECT_FALSE(report["violations"].empty());
  bool saw_condfuscated = false;
  for (const auto& v : report["violations"]) {
    if (v["candidate"] == "condfuscated") {
      saw_condfuscated = true;
      EXPECT_GT(v["measured_distance"].get<int>(), 1);
    }
  }
  EXPECT_TRUE(saw_condfuscated);
  EXPECT_EQ(invoke({"verify", original, candidate, "--strict"}).code, kExitValidation);
  const json capped = json::parse(
      invoke({"verify", original, candidate, "--checks", "distance", "--cap", "2"}).out);
  bool saw_exceeds = false;
  for (const auto& v : capped["violations"]) saw_exceeds |= v["measured_distance"] == "exceeds cap";
  EXPECT_TRUE(saw_exceeds);
}

TEST_F(CliTest, VerifyAlignmentErrorExitsTwo) {
  const auto r = invoke({"verify", fixture("corpus/paragraph_original.txt"),
                         fixture("corpus/paragraph_edit1.txt")});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("index 67"), std::string::npos) << r.err;
}

TEST_F(CliTest, TrialLifecycle) {
  const std::string bundle_path = path("bundle.json");
  ASSERT_EQ(invoke({"trial", "make", "--preset", "paper-experiments", "--seed", "7", "-o",
                    bundle_path})
                .code,
            0);
  const json bundle = json::parse(slurp(bundle_path));
  const std::string id = bundle["bundle_id"];

  // Config-file route produces the same bundle.
  const std::string config =
      write("config.json", R"({"schema_version": 1, "preset": "paper-experiments", "seed": 7})");
  EXPECT_EQ(json::parse(invoke({"trial", "make", config}).out), bundle);

  auto results = [&](const std::string& reader, std::int64_t ms) {
    json records = json::array();
    for (const auto& c : bundle["conditions"]) {
      records.push_back({{"bundle_id", id}, {"reader_id", reader}, {"condition", c["name"]},
                         {"text_index", 0}, {"elapsed_ms", ms},
                         {"recorded_at", "2026-10-17T10:00:00Z"}});
    }
    return json{{"schema_version", 1}, {"type", "trial_results"}, {"bundle_id", id},
                {"reader_id", reader}, {"records", records}};
  };
  const std::string r1 = write("r1.json", results("r1", 4000).dump());
  const std::string r2 = write("r2.json", results("r2", 6000).dump());
  const std::string csv = path("summary.csv");
  const auto ingest = invoke({"trial", "ingest", r1, r2, "--bundle", bundle_path, "--csv", csv});
  ASSERT_EQ(ingest.code, 0) << ingest.err;
  const json summary = json::parse(ingest.out);
  EXPECT_EQ(summary["bundle_id"], id);
  EXPECT_EQ(summary["summaries"].size(), bundle["conditions"].size());
  for (const auto& s : summary["summaries"]) {
    EXPECT_EQ(s["reader_count"], 2);
    EXPECT_EQ(s["mean_time_ms"], 5000.0);
  }
  EXPECT_NE(slurp(csv).find(",2,5000\n"), std::string::npos);

  // Submitting the same file twice is a double submission.
  EXPECT_EQ(invoke({"trial", "ingest", r1, r1}).code, kExitValidation);

  // Results for another bundle.
  json other = results("r3", 100);
  other["bundle_id"] = "bndl-other";
  for (auto& rec : other["records"]) rec["bundle_id"] = "bndl-other";
  const std::string r3 = write("r3.json", other.dump());
  const auto unknown = invoke({"trial", "ingest", r3, "--bundle", bundle_path});
  EXPECT_EQ(unknown.code, kExitValidation);
  EXPECT_NE(unknown.err.find("unknown bundle_id"), std::string::npos);
  EXPECT_EQ(invoke({"trial", "ingest", r1, r3}).code, kExitValidation);

  // Malformed record.
  json broken = results("r4", 100);
  broken["records"][0].erase("elapsed_ms");
  const auto malformed = invoke({"trial", "ingest", write("r4.json", broken.dump())});
  EXPECT_EQ(malformed.code, kExitValidation);
  EXPECT_NE(malformed.err.find("records[0].elapsed_ms"), std::string::npos) << malformed.err;
}

TEST_F(CliTest, TrialMakeErrors) {
  EXPECT_EQ(invoke({"trial", "make"}).code, kExitValidation);
  EXPECT_EQ(invoke({"trial", "make", "--preset", "nope"}).code, kExitValidation);
  EXPECT_EQ(invoke({"trial", "make", write("bad.json", "{not json")}).code, kExitValidation);
  EXPECT_EQ(invoke({"trial", "make", path("missing.json")}).code, kExitValidation);
}

TEST_F(CliTest, TrialMakeResolvesRelativeSourceFiles) {
  write("text.txt", "Relative paths resolve against the config directory.\n");
  const std::string config = write(
      "exp.json",
      R"({"seed": 2, "sources": {"t": {"file": "text.txt"}},
          "conditions": [{"name": "t-jumbled", "sources": ["t"], "pipeline": [{"step": "jumble"}]}]})");
  const auto r = invoke({"trial", "make", config});
  ASSERT_EQ(r.code, 0) << r.err;
  const json b = json::parse(r.out);
  EXPECT_EQ(b["conditions"][0]["texts"][0].get<std::string>().back(), '.');
  EXPECT_EQ(b["created_from"]["seed"], 2);
}

TEST_F(CliTest, OutputFilesAreReplacedWhole) {
  const std::string out = path("out.txt");
  write("out.txt", std::string(10000, 'x'));
  ASSERT_EQ(invoke({"strip", "-o", out}, "keep words").code, 0);
  EXPECT_EQ(slurp(out), "keep words\n");
  for (const auto& entry : fs::directory_iterator(dir_)) {
    EXPECT_EQ(entry.path().string().find(".tmp."), std::string::npos);
  }
}

}  // namespace
}  // namespace jumble::cli
