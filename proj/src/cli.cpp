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

#include "jumble/cli.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "jumble/analysis.hpp"
#include "jumble/distance.hpp"
#include "jumble/error.hpp"
#include "jumble/perturb.hpp"
#include "jumble/text_model.hpp"
#include "jumble/trial.hpp"
#include "jumble/utf8.hpp"
#include "jumble/version.hpp"

namespace jumble::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot read '" + path + "'");
  return read_all(f);
}

json read_json(const std::string& path, std::istream& in) {
  const std::string text = read_input(path, in);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

// Writes via a sibling temp file and rename so readers never see a partial file.
void write_atomic(const std::string& path, std::string_view content) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ValidationError("cannot write '" + path + "'");
    f << content;
    f.flush();
    if (!f) throw ValidationError("failed writing '" + path + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw ValidationError("cannot replace '" + path + "': " + ec.message());
  }
}

void emit(const std::string& output_path, std::string_view content, std::ostream& out) {
  if (output_path.empty() || output_path == "-") {
    out << content;
  } else {
    write_atomic(output_path, content);
  }
}

StopwordLexicon lexicon_for(const std::string& name) {
  if (name == "default") return StopwordLexicon::builtin_default();
  if (name == "paragraph") return StopwordLexicon::builtin_paragraph();
  return StopwordLexicon::load(name);
}

KeyboardLayout layout_for(const std::string& name) {
  if (name.empty() || name == "qwerty") return KeyboardLayout::qwerty();
  return KeyboardLayout::load(name);
}

// --- trace (de)serialisation -------------------------------------------------

json op_to_json(const EditOp& op) {
  json j{{"kind", to_string(op.kind)}, {"position", op.position}};
  if (op.payload) j["payload"] = utf8::encode(*op.payload);
  return j;
}

EditOp op_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path + ": expected an object");
  EditOp op;
  const std::string kind = j.value("kind", "");
  if (kind == "insert") {
    op.kind = EditKind::Insert;
  } else if (kind == "delete") {
    op.kind = EditKind::Delete;
  } else if (kind == "substitute") {
    op.kind = EditKind::Substitute;
  } else if (kind == "transpose") {
    op.kind = EditKind::TransposeAdjacent;
  } else {
    throw ValidationError(path + ".kind: unknown edit kind '" + kind + "'");
  }
  if (!j.contains("position") || !j["position"].is_number_unsigned()) {
    throw ValidationError(path + ".position: expected a non-negative integer");
  }
  op.position = j["position"].get<std::size_t>();
  if (j.contains("payload")) {
    const std::u32string p = utf8::decode(j["payload"].get<std::string>());
    if (p.size() != 1) throw ValidationError(path + ".payload: expected one character");
    op.payload = p[0];
  }
  return op;
}

json trace_document(const std::vector<PerturbationTrace>& traces, const PerturbSpec& spec,
                    Generator generator, const std::string& layout_name) {
  json list = json::array();
  for (const auto& t : traces) {
    json j{{"word_index", t.word_index},
           {"original", t.original},
           {"result", t.result},
           {"kind", to_string(t.kind)}};
    if (t.op) j["op"] = op_to_json(*t.op);
    if (!t.reason.empty()) j["reason"] = t.reason;
    list.push_back(std::move(j));
  }
  return json{{"schema_version", trial::kSchemaVersion},
              {"type", "perturb_trace"},
              {"generator", to_string(generator)},
              {"mode", to_string(spec.mode)},
              {"seed", spec.seed},
              {"min_word_len", spec.min_word_len},
              {"layout", layout_name},
              {"tool_version", kToolVersion},
              {"traces", list}};
}

std::vector<PerturbationTrace> traces_from_json(const json& doc) {
  if (!doc.is_object() || doc.value("type", "") != "perturb_trace") {
    throw ValidationError("type: expected \"perturb_trace\"");
  }
  if (!doc.contains("traces") || !doc["traces"].is_array()) {
    throw ValidationError("traces: missing required field");
  }
  std::vector<PerturbationTrace> out;
  const json& list = doc["traces"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "traces[" + std::to_string(i) + "]";
    const json& j = list[i];
    if (!j.is_object()) throw ValidationError(path + ": expected an object");
    PerturbationTrace t;
    t.word_index = j.value("word_index", std::size_t{0});
    t.original = j.value("original", "");
    t.result = j.value("result", "");
    const std::string kind = j.value("kind", "");
    if (kind == "edit") {
      t.kind = TraceKind::Edit;
    } else if (kind == "jumble-permutation") {
      t.kind = TraceKind::Jumble;
    } else if (kind == "skipped") {
      t.kind = TraceKind::Skipped;
    } else {
      throw ValidationError(path + ".kind: unknown trace kind '" + kind + "'");
    }
    if (j.contains("op")) t.op = op_from_json(j["op"], path + ".op");
    t.reason = j.value("reason", "");
    out.push_back(std::move(t));
  }
  return out;
}

json distance_json(const std::optional<std::size_t>& d) {
  return d ? json(*d) : json("exceeds cap");
}

// --- commands --------------------------------------------------------------

struct DistanceArgs {
  std::string a, b, metric = "levenshtein";
  bool ignore_case = false;
};

int cmd_distance(const DistanceArgs& args, std::ostream& out) {
  const auto metric = parse_metric(args.metric);
  if (!metric) throw ValidationError("unknown metric '" + args.metric + "'");
  out << distance(std::string_view(args.a), std::string_view(args.b), *metric,
                  {.fold_case = args.ignore_case})
      << '\n';
  return kExitOk;
}

struct PerturbArgs {
  std::string input;
  std::string generator = "edit1";
  std::string mode = "unconstrained";
  std::uint64_t seed = 0;
  std::size_t min_word_len = 4;
  std::string layout;
  std::string trace;
  std::string output;
};

int cmd_perturb(const PerturbArgs& args, std::istream& in, std::ostream& out) {
  const auto generator = parse_generator(args.generator);
  if (!generator) throw ValidationError("unknown generator '" + args.generator + "'");
  const auto mode = parse_mode(args.mode);
  if (!mode) throw ValidationError("unknown mode '" + args.mode + "'");

  PerturbSpec spec;
  spec.mode = *mode;
  spec.seed = args.seed;
  spec.min_word_len = args.min_word_len;
  spec.validate();
  const KeyboardLayout layout = layout_for(args.layout);

  const std::string text = read_input(args.input, in);
  const auto result = perturb_text(tokenize(text), spec, layout, *generator);
  if (!args.trace.empty()) {
    const std::string layout_name = args.layout.empty() ? "qwerty" : args.layout;
    write_atomic(args.trace,
                 trace_document(result.traces, spec, *generator, layout_name).dump(2) + "\n");
  }
  emit(args.output, join(result.tokens), out);
  return kExitOk;
}

struct StripArgs {
  std::string input;
  std::string lexicon = "default";
  std::string output;
};

int cmd_strip(const StripArgs& args, std::istream& in, std::ostream& out) {
  const StopwordLexicon lexicon = lexicon_for(args.lexicon);
  const std::string text = read_input(args.input, in);
  emit(args.output, join(strip_stopwords(tokenize(text), lexicon)) + "\n", out);
  return kExitOk;
}

struct VerifyArgs {
  std::string original, candidate, trace;
  std::vector<std::string> checks{"distance"};
  std::string metric = "osa";
  std::size_t max_distance = 1;
  std::size_t cap = 4;
  std::string layout;
  bool strict = false;
  std::string output;
};

int cmd_verify_trace(const VerifyArgs& args, std::istream& in, std::ostream& out) {
  const json doc = read_json(args.trace, in);
  const auto traces = traces_from_json(doc);
  const auto mode = parse_mode(doc.value("mode", "unconstrained"));
  if (!mode) throw ValidationError("mode: unknown constraint mode");
  std::string layout_name = args.layout;
  if (layout_name.empty()) layout_name = doc.value("layout", "qwerty");
  const auto verdicts = verify_traces(traces, *mode, layout_for(layout_name));

  json violations = json::array();
  for (const auto& v : verdicts) {
    if (!v.ok()) {
      violations.push_back({{"word_index", v.word_index}, {"problems", v.problems}});
    }
  }
  const bool all_passed = violations.empty();
  const json report{{"schema_version", trial::kSchemaVersion},
                    {"type", "trace_report"},
                    {"mode", to_string(*mode)},
                    {"trace_count", verdicts.size()},
                    {"all_passed", all_passed},
                    {"violations", violations}};
  emit(args.output, report.dump(2) + "\n", out);
  return args.strict && !all_passed ? kExitValidation : kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::istream& in, std::ostream& out) {
  if (!args.trace.empty()) return cmd_verify_trace(args, in, out);
  if (args.original.empty() || args.candidate.empty()) {
    throw ValidationError("verify needs ORIGINAL and CANDIDATE files, or --trace");
  }
  CheckSet checks;
  checks.cap = args.cap;
  const auto metric = parse_metric(args.metric);
  if (!metric) throw ValidationError("unknown metric '" + args.metric + "'");
  checks.metric = *metric;
  for (const auto& name : args.checks) {
    const auto c = parse_check(name);
    if (!c) throw ValidationError("unknown check '" + name + "'");
    switch (*c) {
      case Check::EndpointsFixed: checks.endpoints_fixed = true; break;
      case Check::MultisetEqual: checks.multiset_equal = true; break;
      case Check::WithinDistance: checks.max_distance = args.max_distance; break;
    }
  }

  const auto original = tokenize(read_input(args.original, in));
  const auto candidate = tokenize(read_input(args.candidate, in));
  const auto verdicts = verify_pair(original, candidate, checks);

  auto names = [](const std::vector<Check>& cs) {
    json a = json::array();
    for (Check c : cs) a.push_back(to_string(c));
    return a;
  };
  json list = json::array();
  json violations = json::array();
  std::size_t passed = 0;
  for (const auto& v : verdicts) {
    json j{{"index", v.index},
           {"original", v.original},
           {"candidate", v.candidate},
           {"checks", names(v.checks)},
           {"passed", names(v.passed)}};
    if (v.measured_distance) j["measured_distance"] = distance_json(*v.measured_distance);
    if (v.ok()) {
      ++passed;
    } else {
      json bad = j;
      bad.erase("checks");
      bad.erase("passed");
      bad["failed"] = names(v.failed());
      violations.push_back(std::move(bad));
    }
    list.push_back(std::move(j));
  }
  json report{{"schema_version", trial::kSchemaVersion},
              {"type", "verify_report"},
              {"metric", to_string(checks.metric)},
              {"checks", args.checks},
              {"cap", checks.cap},
              {"word_count", verdicts.size()},
              {"passed_count", passed},
              {"all_passed", violations.empty()},
              {"violations", violations},
              {"verdicts", list}};
  if (checks.max_distance) report["max_distance"] = *checks.max_distance;
  emit(args.output, report.dump(2) + "\n", out);
  return args.strict && !violations.empty() ? kExitValidation : kExitOk;
}

struct StatsArgs {
  std::string original, candidate;
  std::string metric = "osa";
  double claimed_low = 0.45;
  double claimed_high = 0.50;
  std::string csv;
  std::string output;
};

int cmd_stats(const StatsArgs& args, std::istream& in, std::ostream& out) {
  const auto metric = parse_metric(args.metric);
  if (!metric) throw ValidationError("unknown metric '" + args.metric + "'");
  const auto stats = corpus_stats(tokenize(read_input(args.original, in)),
                                  tokenize(read_input(args.candidate, in)), *metric);
  json histogram = json::object();
  std::string csv = "distance,count\n";
  for (const auto& [d, n] : stats.distance_histogram) {
    histogram[std::to_string(d)] = n;
    csv += std::to_string(d) + "," + std::to_string(n) + "\n";
  }
  const bool within =
      stats.unchanged_fraction >= args.claimed_low && stats.unchanged_fraction <= args.claimed_high;
  const json report{{"schema_version", trial::kSchemaVersion},
                    {"type", "stats_report"},
                    {"metric", to_string(*metric)},
                    {"word_count", stats.word_count},
                    {"unchanged_count", stats.unchanged_count},
                    {"unchanged_fraction", stats.unchanged_fraction},
                    {"distance_histogram", histogram},
                    {"claimed_range",
                     {{"low", args.claimed_low}, {"high", args.claimed_high}, {"within", within}}}};
  if (!args.csv.empty()) write_atomic(args.csv, csv);
  emit(args.output, report.dump(2) + "\n", out);
  return kExitOk;
}

struct TrialMakeArgs {
  std::string config;
  std::string preset;
  std::optional<std::uint64_t> seed;
  std::string presentation;
  std::string output;
};

int cmd_trial_make(const TrialMakeArgs& args, std::istream& in, std::ostream& out) {
  json config;
  fs::path base_dir;
  if (!args.preset.empty()) {
    if (!args.config.empty()) throw ValidationError("give either CONFIG or --preset, not both");
    config = json{{"schema_version", trial::kSchemaVersion}, {"preset", args.preset}};
  } else {
    if (args.config.empty()) throw ValidationError("trial make needs CONFIG or --preset");
    config = read_json(args.config, in);
    if (args.config != "-") base_dir = fs::path(args.config).parent_path();
  }
  if (args.seed) config["seed"] = *args.seed;
  if (!args.presentation.empty()) config["presentation"] = args.presentation;
  const trial::TrialBundle bundle = trial::make_bundle(config, base_dir);
  emit(args.output, trial::to_json(bundle).dump(2) + "\n", out);
  return kExitOk;
}

struct TrialIngestArgs {
  std::vector<std::string> results;
  std::string bundle;
  std::string csv;
  std::string output;
};

int cmd_trial_ingest(const TrialIngestArgs& args, std::istream& in, std::ostream& out) {
  std::optional<trial::TrialBundle> bundle;
  if (!args.bundle.empty()) bundle = trial::bundle_from_json(read_json(args.bundle, in));

  std::vector<TrialRecord> records;
  std::string bundle_id = bundle ? bundle->bundle_id : std::string();
  for (const auto& path : args.results) {
    trial::TrialResults results;
    try {
      results = trial::results_from_json(read_json(path, in));
      if (bundle) trial::check_against_bundle(results, *bundle);
    } catch (const ValidationError& e) {
      throw ValidationError(path + ": " + e.what());
    }
    if (bundle_id.empty()) bundle_id = results.bundle_id;
    if (results.bundle_id != bundle_id) {
      throw ValidationError(path + ": unknown bundle_id '" + results.bundle_id +
                            "' (other results use '" + bundle_id + "')");
    }
    records.insert(records.end(), results.records.begin(), results.records.end());
  }
  const auto summaries = aggregate_trials(records);
  if (!args.csv.empty()) write_atomic(args.csv, trial::summaries_to_csv(summaries));
  emit(args.output, trial::summaries_to_json(bundle_id, summaries).dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Generate, verify and analyse jumbled and perturbed text", "jumble"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  DistanceArgs dist;
  auto* distance_cmd = app.add_subcommand("distance", "Edit distance between two strings");
  distance_cmd->add_option("a", dist.a, "First string")->required();
  distance_cmd->add_option("b", dist.b, "Second string")->required();
  distance_cmd->add_option("--metric", dist.metric,
                           "levenshtein | osa | damerau-levenshtein (dl) | hamming")
      ->capture_default_str();
  distance_cmd->add_flag("--ignore-case", dist.ignore_case, "Compare case-folded strings");

  PerturbArgs perturb;
  auto add_perturb_options = [](CLI::App* cmd, PerturbArgs& p) {
    cmd->add_option("input", p.input, "Input text file (default: stdin)");
    cmd->add_option("--seed", p.seed, "Random seed")->capture_default_str();
    cmd->add_option("--min-word-len", p.min_word_len, "Shorter words pass through unchanged")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--trace", p.trace, "Write per-word provenance JSON to this file");
    cmd->add_option("-o,--output", p.output, "Write text here instead of stdout");
  };
  auto* perturb_cmd = app.add_subcommand("perturb", "Perturb every word of a text");
  add_perturb_options(perturb_cmd, perturb);
  perturb_cmd->add_option("--generator", perturb.generator, "jumble | edit1")
      ->capture_default_str();
  perturb_cmd->add_option("--mode", perturb.mode,
                          "unconstrained | fix-first | fix-first-last | qwerty (edit1 only)")
      ->capture_default_str();
  perturb_cmd->add_option("--layout", perturb.layout, "Keyboard layout file (default: qwerty)");

  PerturbArgs jumble;
  jumble.generator = "jumble";
  auto* jumble_cmd =
      app.add_subcommand("jumble", "Shuffle word interiors (perturb --generator jumble)");
  add_perturb_options(jumble_cmd, jumble);

  StripArgs strip;
  auto* strip_cmd = app.add_subcommand("strip", "Remove function words");
  strip_cmd->add_option("input", strip.input, "Input text file (default: stdin)");
  strip_cmd->add_option("--lexicon", strip.lexicon,
                        "default | paragraph | path to a lexicon file")
      ->capture_default_str();
  strip_cmd->add_option("-o,--output", strip.output, "Write text here instead of stdout");

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a candidate text word-by-word against its original");
  verify_cmd->add_option("original", verify.original, "Original text file");
  verify_cmd->add_option("candidate", verify.candidate, "Candidate text file");
  verify_cmd->add_option("--trace", verify.trace, "Verify a perturb --trace file instead");
  verify_cmd->add_option("--checks", verify.checks, "endpoints,multiset,distance")
      ->delimiter(',')
      ->capture_default_str();
  verify_cmd->add_option("--metric", verify.metric, "Metric for the distance check")
      ->capture_default_str();
  verify_cmd->add_option("--max-distance", verify.max_distance, "Allowed distance")
      ->capture_default_str();
  verify_cmd->add_option("--cap", verify.cap, "Report distances above this as 'exceeds cap'")
      ->capture_default_str();
  verify_cmd->add_option("--layout", verify.layout, "Keyboard layout for --trace in qwerty mode");
  verify_cmd->add_flag("--strict", verify.strict, "Exit with status 2 when any check fails");
  verify_cmd->add_option("-o,--output", verify.output, "Write the report here");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Unchanged-word fraction and distance histogram");
  stats_cmd->add_option("original", stats.original, "Original text file")->required();
  stats_cmd->add_option("candidate", stats.candidate, "Candidate text file")->required();
  stats_cmd->add_option("--metric", stats.metric, "Metric for the histogram")
      ->capture_default_str();
  stats_cmd->add_option("--claimed-low", stats.claimed_low, "Lower bound of the claimed range")
      ->capture_default_str();
  stats_cmd->add_option("--claimed-high", stats.claimed_high, "Upper bound of the claimed range")
      ->capture_default_str();
  stats_cmd->add_option("--csv", stats.csv, "Write the histogram as CSV");
  stats_cmd->add_option("-o,--output", stats.output, "Write the report here");

  auto* trial_cmd = app.add_subcommand("trial", "Reading-time trial bundles");
  trial_cmd->require_subcommand(1);

  TrialMakeArgs make;
  auto* make_cmd = trial_cmd->add_subcommand("make", "Build a trial bundle from a config");
  make_cmd->add_option("config", make.config, "Config JSON file ('-' for stdin)");
  make_cmd->add_option("--preset", make.preset, "Built-in config: paper-experiments");
  make_cmd->add_option("--seed", make.seed, "Override the config seed");
  make_cmd->add_option("--presentation", make.presentation,
                       "fixed_order | shuffled_per_reader");
  make_cmd->add_option("-o,--output", make.output, "Write the bundle here");

  TrialIngestArgs ingest;
  auto* ingest_cmd =
      trial_cmd->add_subcommand("ingest", "Validate exported results and average reading times");
  ingest_cmd->add_option("results", ingest.results, "Results JSON files")->required();
  ingest_cmd->add_option("--bundle", ingest.bundle, "Bundle the results must belong to");
  ingest_cmd->add_option("--csv", ingest.csv, "Write per-condition means as CSV");
  ingest_cmd->add_option("-o,--output", ingest.output, "Write the summary JSON here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (distance_cmd->parsed()) return cmd_distance(dist, out);
    if (perturb_cmd->parsed()) return cmd_perturb(perturb, in, out);
    if (jumble_cmd->parsed()) return cmd_perturb(jumble, in, out);
    if (strip_cmd->parsed()) return cmd_strip(strip, in, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, in, out);
    if (stats_cmd->parsed()) return cmd_stats(stats, in, out);
    if (make_cmd->parsed()) return cmd_trial_make(make, in, out);
    if (ingest_cmd->parsed()) return cmd_trial_ingest(ingest, in, out);
  } catch (const ValidationError& e) {
    err << "jumble: error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "jumble: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace jumble::cli
