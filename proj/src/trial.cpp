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

#include "jumble/trial.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "jumble/error.hpp"
#include "jumble/resources.hpp"
#include "jumble/version.hpp"

namespace jumble::trial {

using nlohmann::json;

std::string_view to_string(Presentation p) noexcept {
  return p == Presentation::FixedOrder ? "fixed_order" : "shuffled_per_reader";
}

std::optional<Presentation> parse_presentation(std::string_view name) noexcept {
  if (name == "fixed_order") return Presentation::FixedOrder;
  if (name == "shuffled_per_reader") return Presentation::ShuffledPerReader;
  return std::nullopt;
}

const Condition* TrialBundle::find(std::string_view condition) const {
  for (const auto& c : conditions) {
    if (c.name == condition) return &c;
  }
  return nullptr;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

namespace {

// --- schema checks ---------------------------------------------------------

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

std::string child(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string element(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path.empty() ? "(document)" : path, "expected an object");
}

const json& require(const json& obj, const std::string& path, std::string_view key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(child(path, key), "missing required field");
  return *it;
}

std::string get_string(const json& obj, const std::string& path, std::string_view key,
                       bool non_empty = true) {
  const json& v = require(obj, path, key);
  if (!v.is_string()) fail(child(path, key), "expected a string");
  auto s = v.get<std::string>();
  if (non_empty && s.empty()) fail(child(path, key), "must not be empty");
  return s;
}

std::uint64_t get_uint(const json& v, const std::string& path) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                 v.get<std::int64_t>() < 0)) {
    fail(path, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

void check_header(const json& doc, std::string_view type) {
  require_object(doc, "");
  const json& version = require(doc, "", "schema_version");
  if (!version.is_number_integer() || version.get<std::int64_t>() != kSchemaVersion) {
    fail("schema_version", "expected " + std::to_string(kSchemaVersion));
  }
  if (get_string(doc, "", "type") != type) {
    fail("type", "expected \"" + std::string(type) + "\"");
  }
}

std::string_view step_name(PipelineStep::Kind k) {
  switch (k) {
    case PipelineStep::Kind::Strip: return "strip";
    case PipelineStep::Kind::Jumble: return "jumble";
    case PipelineStep::Kind::Edit1: return "edit1";
  }
  return "?";
}

json step_to_json(const PipelineStep& s) {
  json j{{"step", step_name(s.kind)}};
  switch (s.kind) {
    case PipelineStep::Kind::Strip:
      j["lexicon"] = s.lexicon;
      break;
    case PipelineStep::Kind::Edit1:
      j["mode"] = to_string(s.mode);
      j["layout"] = s.layout;
      [[fallthrough]];
    case PipelineStep::Kind::Jumble:
      j["min_word_len"] = s.min_word_len;
      j["seed"] = s.seed;
      break;
  }
  return j;
}

PipelineStep step_from_json(const json& j, const std::string& path, std::uint64_t default_seed) {
  require_object(j, path);
  PipelineStep s;
  s.seed = default_seed;
  const std::string kind = get_string(j, path, "step");
  if (kind == "strip") {
    s.kind = PipelineStep::Kind::Strip;
  } else if (kind == "jumble") {
    s.kind = PipelineStep::Kind::Jumble;
  } else if (kind == "edit1") {
    s.kind = PipelineStep::Kind::Edit1;
  } else {
    fail(child(path, "step"), "unknown step '" + kind + "'");
  }
  if (j.contains("lexicon")) s.lexicon = get_string(j, path, "lexicon");
  if (j.contains("layout")) s.layout = get_string(j, path, "layout");
  if (j.contains("mode")) {
    const std::string mode = get_string(j, path, "mode");
    const auto m = parse_mode(mode);
    if (!m) fail(child(path, "mode"), "unknown mode '" + mode + "'");
    s.mode = *m;
  }
  if (j.contains("min_word_len")) {
    s.min_word_len = get_uint(j["min_word_len"], child(path, "min_word_len"));
    if (s.min_word_len < 1) fail(child(path, "min_word_len"), "must be at least 1");
  }
  if (j.contains("seed")) s.seed = get_uint(j["seed"], child(path, "seed"));
  return s;
}

std::string describe_pipeline(std::span<const PipelineStep> pipeline) {
  if (pipeline.empty()) return "unmodified text";
  std::string out;
  for (const auto& s : pipeline) {
    if (!out.empty()) out += ", then ";
    switch (s.kind) {
      case PipelineStep::Kind::Strip:
        out += "strip function words (" + s.lexicon + " lexicon)";
        break;
      case PipelineStep::Kind::Jumble:
        out += "jumble interiors (min length " + std::to_string(s.min_word_len) + ", seed " +
               std::to_string(s.seed) + ")";
        break;
      case PipelineStep::Kind::Edit1:
        out += "one edit per word, " + std::string(to_string(s.mode)) + " (min length " +
               std::to_string(s.min_word_len) + ", seed " + std::to_string(s.seed) + ")";
        break;
    }
  }
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + p.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

// Trailing newlines of file-based sources are not part of the display text.
std::string trim_trailing_newlines(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

json to_json(const TrialBundle& bundle) {
  json conditions = json::array();
  for (const auto& c : bundle.conditions) {
    json pipeline = json::array();
    for (const auto& s : c.pipeline) pipeline.push_back(step_to_json(s));
    conditions.push_back({{"name", c.name},
                          {"description", c.description},
                          {"sources", c.sources},
                          {"pipeline", pipeline},
                          {"texts", c.texts}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"type", "trial_bundle"},
              {"bundle_id", bundle.bundle_id},
              {"presentation", to_string(bundle.presentation)},
              {"created_from",
               {{"source_sha256", bundle.created_from.source_sha256},
                {"seed", bundle.created_from.seed},
                {"tool_version", bundle.created_from.tool_version}}},
              {"conditions", conditions}};
}

TrialBundle bundle_from_json(const json& doc) {
  check_header(doc, "trial_bundle");
  TrialBundle b;
  b.bundle_id = get_string(doc, "", "bundle_id");
  const std::string presentation = get_string(doc, "", "presentation");
  const auto p = parse_presentation(presentation);
  if (!p) fail("presentation", "unknown presentation '" + presentation + "'");
  b.presentation = *p;

  const json& prov = require(doc, "", "created_from");
  require_object(prov, "created_from");
  b.created_from.source_sha256 = get_string(prov, "created_from", "source_sha256");
  if (b.created_from.source_sha256.size() != 64 ||
      b.created_from.source_sha256.find_first_not_of("0123456789abcdef") != std::string::npos) {
    fail("created_from.source_sha256", "expected 64 lowercase hex digits");
  }
  b.created_from.seed = get_uint(require(prov, "created_from", "seed"), "created_from.seed");
  b.created_from.tool_version = get_string(prov, "created_from", "tool_version");

  const json& conditions = require(doc, "", "conditions");
  if (!conditions.is_array()) fail("conditions", "expected an array");
  if (conditions.empty()) fail("conditions", "must contain at least one condition");
  std::set<std::string> names;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    const std::string path = element("conditions", i);
    const json& cj = conditions[i];
    require_object(cj, path);
    Condition c;
    c.name = get_string(cj, path, "name");
    if (!names.insert(c.name).second) {
      fail(child(path, "name"), "duplicate condition name '" + c.name + "'");
    }
    c.description = get_string(cj, path, "description", false);
    if (cj.contains("sources")) {
      const json& src = cj["sources"];
      if (!src.is_array()) fail(child(path, "sources"), "expected an array");
      for (std::size_t k = 0; k < src.size(); ++k) {
        if (!src[k].is_string()) fail(element(child(path, "sources"), k), "expected a string");
        c.sources.push_back(src[k].get<std::string>());
      }
    }
    const json& pipeline = require(cj, path, "pipeline");
    if (!pipeline.is_array()) fail(child(path, "pipeline"), "expected an array");
    for (std::size_t k = 0; k < pipeline.size(); ++k) {
      c.pipeline.push_back(
          step_from_json(pipeline[k], element(child(path, "pipeline"), k), b.created_from.seed));
    }
    const json& texts = require(cj, path, "texts");
    if (!texts.is_array()) fail(child(path, "texts"), "expected an array");
    if (texts.empty()) fail(child(path, "texts"), "must contain at least one text");
    for (std::size_t k = 0; k < texts.size(); ++k) {
      if (!texts[k].is_string()) fail(element(child(path, "texts"), k), "expected a string");
      c.texts.push_back(texts[k].get<std::string>());
    }
    b.conditions.push_back(std::move(c));
  }
  return b;
}

std::string apply_pipeline(std::string_view text, std::span<const PipelineStep> pipeline,
                           const std::filesystem::path& base_dir) {
  std::vector<Token> tokens = tokenize(text);
  for (const auto& step : pipeline) {
    switch (step.kind) {
      case PipelineStep::Kind::Strip: {
        const StopwordLexicon lexicon =
            step.lexicon == "paragraph" ? StopwordLexicon::builtin_paragraph()
            : step.lexicon == "default"
                ? StopwordLexicon::builtin_default()
                : StopwordLexicon::load(resolve(base_dir, step.lexicon).string());
        tokens = strip_stopwords(tokens, lexicon);
        break;
      }
      case PipelineStep::Kind::Jumble:
      case PipelineStep::Kind::Edit1: {
        PerturbSpec spec;
        spec.mode = step.mode;
        spec.min_word_len = step.min_word_len;
        spec.seed = step.seed;
        const KeyboardLayout layout =
            step.layout == "qwerty" ? KeyboardLayout::qwerty()
                                    : KeyboardLayout::load(resolve(base_dir, step.layout).string());
        const auto generator =
            step.kind == PipelineStep::Kind::Jumble ? Generator::Jumble : Generator::Edit1;
        tokens = perturb_text(tokens, spec, layout, generator).tokens;
        break;
      }
    }
  }
  return join(tokens);
}

json paper_experiments_config(std::uint64_t seed) {
  auto condition = [](std::string name, std::string source, json pipeline) {
    return json{{"name", std::move(name)},
                {"sources", json::array({std::move(source)})},
                {"pipeline", std::move(pipeline)}};
  };
  auto edit1 = [](std::string_view mode) {
    return json::array({json{{"step", "edit1"}, {"mode", mode}}});
  };
  const json jumble = json::array({json{{"step", "jumble"}}});
  json conditions = json::array({
      condition("paragraph-original", "paragraph", json::array()),
      condition("paragraph-jumbled", "paragraph", jumble),
      condition("paragraph-no-function-words", "paragraph",
                json::array({json{{"step", "strip"}, {"lexicon", "paragraph"}}})),
      condition("paragraph-no-function-words-jumbled", "paragraph",
                json::array({json{{"step", "strip"}, {"lexicon", "paragraph"}},
                             json{{"step", "jumble"}}})),
      condition("words-original", "words", json::array()),
      condition("words-jumbled", "words", jumble),
      condition("paragraph-edit1-unconstrained", "paragraph", edit1("unconstrained")),
      condition("words-edit1-unconstrained", "words", edit1("unconstrained")),
      condition("words-edit1-fix-first", "words", edit1("fix-first")),
      condition("words-edit1-fix-first-last", "words", edit1("fix-first-last")),
      condition("words-edit1-qwerty", "words", edit1("qwerty")),
  });
  return json{{"schema_version", kSchemaVersion},
              {"seed", seed},
              {"presentation", "fixed_order"},
              {"sources",
               {{"paragraph", {{"builtin", "corpus/paragraph_original.txt"}}},
                {"words", {{"builtin", "corpus/words100.txt"}}}}},
              {"conditions", conditions}};
}

TrialBundle make_bundle(const json& config_in, const std::filesystem::path& base_dir) {
  require_object(config_in, "");
  if (config_in.contains("schema_version")) {
    const json& v = config_in["schema_version"];
    if (!v.is_number_integer() || v.get<std::int64_t>() != kSchemaVersion) {
      fail("schema_version", "expected " + std::to_string(kSchemaVersion));
    }
  }
  std::uint64_t seed = 0;
  if (config_in.contains("seed")) seed = get_uint(config_in["seed"], "seed");

  json config = config_in;
  if (config_in.contains("preset")) {
    const std::string preset = get_string(config_in, "", "preset");
    if (preset != kPaperExperimentsPreset) fail("preset", "unknown preset '" + preset + "'");
    config = paper_experiments_config(seed);
    if (config_in.contains("presentation")) config["presentation"] = config_in["presentation"];
  }

  TrialBundle bundle;
  bundle.created_from.seed = seed;
  bundle.created_from.tool_version = kToolVersion;
  if (config.contains("presentation")) {
    const std::string name = get_string(config, "", "presentation");
    const auto p = parse_presentation(name);
    if (!p) fail("presentation", "unknown presentation '" + name + "'");
    bundle.presentation = *p;
  }

  // Sources, resolved in key order for a stable content hash.
  std::map<std::string, std::string> sources;
  const json& src = require(config, "", "sources");
  require_object(src, "sources");
  for (const auto& [key, spec] : src.items()) {
    const std::string path = child("sources", key);
    require_object(spec, path);
    if (spec.contains("text")) {
      sources[key] = get_string(spec, path, "text");
    } else if (spec.contains("file")) {
      sources[key] =
          trim_trailing_newlines(read_file(resolve(base_dir, get_string(spec, path, "file"))));
    } else if (spec.contains("builtin")) {
      sources[key] = trim_trailing_newlines(std::string(resource(get_string(spec, path, "builtin"))));
    } else {
      fail(path, "expected one of 'text', 'file', 'builtin'");
    }
  }
  std::string hash_input;
  for (const auto& [key, text] : sources) {
    hash_input += key;
    hash_input.push_back('\0');
    hash_input += text;
    hash_input.push_back('\0');
  }
  bundle.created_from.source_sha256 = sha256_hex(hash_input);

  const json& conditions = require(config, "", "conditions");
  if (!conditions.is_array() || conditions.empty()) {
    fail("conditions", "expected a non-empty array");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    const std::string path = element("conditions", i);
    const json& cj = conditions[i];
    require_object(cj, path);
    Condition c;
    c.name = get_string(cj, path, "name");
    if (!names.insert(c.name).second) {
      fail(child(path, "name"), "duplicate condition name '" + c.name + "'");
    }
    const json& cs = require(cj, path, "sources");
    if (!cs.is_array() || cs.empty()) fail(child(path, "sources"), "expected a non-empty array");
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const std::string sp = element(child(path, "sources"), k);
      if (!cs[k].is_string()) fail(sp, "expected a string");
      const auto key = cs[k].get<std::string>();
      if (!sources.contains(key)) fail(sp, "unknown source '" + key + "'");
      c.sources.push_back(key);
    }
    if (cj.contains("pipeline")) {
      const json& pipeline = cj["pipeline"];
      if (!pipeline.is_array()) fail(child(path, "pipeline"), "expected an array");
      for (std::size_t k = 0; k < pipeline.size(); ++k) {
        c.pipeline.push_back(step_from_json(pipeline[k], element(child(path, "pipeline"), k), seed));
      }
    }
    c.description = cj.contains("description") ? get_string(cj, path, "description", false)
                                               : describe_pipeline(c.pipeline);
    for (const auto& key : c.sources) {
      c.texts.push_back(apply_pipeline(sources.at(key), c.pipeline, base_dir));
    }
    bundle.conditions.push_back(std::move(c));
  }

  json content = to_json(bundle);
  content.erase("bundle_id");
  bundle.bundle_id = "bndl-" + sha256_hex(content.dump()).substr(0, 16);
  return bundle;
}

json to_json(const TrialResults& results) {
  json records = json::array();
  for (const auto& r : results.records) {
    records.push_back({{"bundle_id", r.bundle_id},
                       {"reader_id", r.reader_id},
                       {"condition", r.condition},
                       {"text_index", r.text_index},
                       {"elapsed_ms", r.elapsed_ms},
                       {"recorded_at", r.recorded_at}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"type", "trial_results"},
              {"bundle_id", results.bundle_id},
              {"reader_id", results.reader_id},
              {"records", records}};
}

TrialResults results_from_json(const json& doc) {
  check_header(doc, "trial_results");
  TrialResults out;
  out.bundle_id = get_string(doc, "", "bundle_id");
  out.reader_id = get_string(doc, "", "reader_id");
  const json& records = require(doc, "", "records");
  if (!records.is_array()) fail("records", "expected an array");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string path = element("records", i);
    const json& rj = records[i];
    require_object(rj, path);
    TrialRecord r;
    r.bundle_id = get_string(rj, path, "bundle_id");
    if (r.bundle_id != out.bundle_id) {
      fail(child(path, "bundle_id"), "'" + r.bundle_id + "' does not match the file's bundle_id");
    }
    r.reader_id = get_string(rj, path, "reader_id");
    if (r.reader_id != out.reader_id) {
      fail(child(path, "reader_id"), "'" + r.reader_id + "' does not match the file's reader_id");
    }
    r.condition = get_string(rj, path, "condition");
    r.text_index = get_uint(require(rj, path, "text_index"), child(path, "text_index"));
    const json& elapsed = require(rj, path, "elapsed_ms");
    if (!elapsed.is_number_integer() || elapsed.get<std::int64_t>() <= 0) {
      fail(child(path, "elapsed_ms"), "expected a positive integer");
    }
    r.elapsed_ms = elapsed.get<std::int64_t>();
    r.recorded_at = get_string(rj, path, "recorded_at", false);
    out.records.push_back(std::move(r));
  }
  return out;
}

void check_against_bundle(const TrialResults& results, const TrialBundle& bundle) {
  if (results.bundle_id != bundle.bundle_id) {
    throw ValidationError("results for reader '" + results.reader_id + "' reference unknown bundle_id '" +
                          results.bundle_id + "' (expected '" + bundle.bundle_id + "')");
  }
  for (std::size_t i = 0; i < results.records.size(); ++i) {
    const auto& r = results.records[i];
    const Condition* c = bundle.find(r.condition);
    if (c == nullptr) {
      fail(element("records", i) + ".condition", "unknown condition '" + r.condition + "'");
    }
    if (r.text_index >= c->texts.size()) {
      fail(element("records", i) + ".text_index",
           std::to_string(r.text_index) + " out of range for condition '" + r.condition + "'");
    }
  }
}

json summaries_to_json(std::string_view bundle_id, std::span<const TrialSummary> summaries) {
  json list = json::array();
  for (const auto& s : summaries) {
    list.push_back({{"condition", s.condition},
                    {"reader_count", s.reader_count},
                    {"mean_time_ms", s.mean_time_ms},
                    {"per_reader", s.per_reader}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"type", "trial_summary"},
              {"bundle_id", bundle_id},
              {"summaries", list}};
}

std::string summaries_to_csv(std::span<const TrialSummary> summaries) {
  std::string out = "condition,reader_count,mean_time_ms\n";
  for (const auto& s : summaries) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), s.mean_time_ms);
    out += s.condition + "," + std::to_string(s.reader_count) + "," +
           std::string(buf.data(), res.ptr) + "\n";
  }
  return out;
}

}  // namespace jumble::trial
