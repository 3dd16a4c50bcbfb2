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

#include "jumble/perturb.hpp"

#include <algorithm>
#include <limits>

#include "jumble/error.hpp"
#include "jumble/utf8.hpp"

namespace jumble {

std::string_view to_string(ConstraintMode mode) noexcept {
  switch (mode) {
    case ConstraintMode::Unconstrained: return "unconstrained";
    case ConstraintMode::FixFirst: return "fix-first";
    case ConstraintMode::FixFirstLast: return "fix-first-last";
    case ConstraintMode::QwertyNeighbor: return "qwerty";
  }
  return "?";
}

std::optional<ConstraintMode> parse_mode(std::string_view name) noexcept {
  for (auto m : {ConstraintMode::Unconstrained, ConstraintMode::FixFirst,
                 ConstraintMode::FixFirstLast, ConstraintMode::QwertyNeighbor}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

std::string_view to_string(Generator generator) noexcept {
  return generator == Generator::Jumble ? "jumble" : "edit1";
}

std::optional<Generator> parse_generator(std::string_view name) noexcept {
  if (name == "jumble") return Generator::Jumble;
  if (name == "edit1") return Generator::Edit1;
  return std::nullopt;
}

std::string_view to_string(TraceKind kind) noexcept {
  switch (kind) {
    case TraceKind::Edit: return "edit";
    case TraceKind::Jumble: return "jumble-permutation";
    case TraceKind::Skipped: return "skipped";
  }
  return "?";
}

void PerturbSpec::validate() const {
  if (distance != 1) {
    throw ValidationError("perturbation distance must be 1 (got " + std::to_string(distance) +
                          ")");
  }
  if (min_word_len < 1) throw ValidationError("min_word_len must be at least 1");
  if (alphabet.empty()) throw ValidationError("perturbation alphabet is empty");
  if (std::any_of(alphabet.begin(), alphabet.end(), utf8::is_apostrophe)) {
    throw ValidationError("perturbation alphabet must not contain an apostrophe");
  }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr int kJumbleRetries = 64;

}  // namespace

Rng Rng::for_word(std::uint64_t seed, std::uint64_t word_index) {
  return Rng(splitmix64(splitmix64(seed) ^ word_index));
}

std::size_t Rng::below(std::size_t bound) {
  if (bound == 0) throw Error("Rng::below called with zero bound");
  const std::uint64_t b = bound;
  // Reject the low (2^64 mod b) values so every residue is equally likely.
  const std::uint64_t threshold = (0 - b) % b;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return static_cast<std::size_t>(x % b);
  }
}

namespace {

struct JumbleOutcome {
  std::u32string result;
  bool changed_possible = false;  // interior had >= 2 distinct scalars
};

JumbleOutcome jumble_scalars(const std::u32string& word, Rng& rng) {
  JumbleOutcome out{word, false};
  if (word.size() < 4) return out;
  const auto first = word.begin() + 1;
  const auto last = word.end() - 1;
  out.changed_possible =
      std::adjacent_find(first, last, std::not_equal_to<>()) != last;
  if (!out.changed_possible) return out;

  for (int attempt = 0; attempt < kJumbleRetries; ++attempt) {
    std::u32string candidate = word;
    // Fisher-Yates over the interior [1, n-1).
    for (std::size_t i = candidate.size() - 2; i > 1; --i) {
      const std::size_t j = 1 + rng.below(i);
      std::swap(candidate[i], candidate[j]);
    }
    if (candidate != word) {
      out.result = std::move(candidate);
      return out;
    }
  }
  return out;
}

}  // namespace

std::string jumble_word(std::string_view word, Rng& rng) {
  return utf8::encode(jumble_scalars(utf8::decode(word), rng).result);
}

std::vector<EditOp> enumerate_legal_ops(std::u32string_view word, const PerturbSpec& spec,
                                        const KeyboardLayout& layout) {
  std::vector<EditOp> ops;
  const std::size_t n = word.size();
  if (n == 0) return ops;

  const bool fix_first = spec.mode == ConstraintMode::FixFirst ||
                         spec.mode == ConstraintMode::FixFirstLast;
  const bool fix_last = spec.mode == ConstraintMode::FixFirstLast;
  const bool qwerty = spec.mode == ConstraintMode::QwertyNeighbor;

  // Scalar index i is protected when it is an endpoint the mode fixes.
  auto protected_index = [&](std::size_t i) {
    return (fix_first && i == 0) || (fix_last && i == n - 1);
  };
  auto payloads = [&](char32_t anchor) -> std::u32string {
    if (!qwerty) return spec.alphabet;
    std::u32string allowed;
    for (char32_t c : spec.alphabet) {
      if (layout.adjacent(anchor, c)) allowed.push_back(c);
    }
    return allowed;
  };

  for (std::size_t p = 0; p <= n; ++p) {
    if (fix_first && p == 0) continue;
    if (fix_last && p == n) continue;
    const char32_t anchor = p == 0 ? word[0] : word[p - 1];
    for (char32_t c : payloads(anchor)) ops.push_back(EditOp::insert(p, c));
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (protected_index(p)) continue;
    ops.push_back(EditOp::erase(p));
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (protected_index(p)) continue;
    for (char32_t c : payloads(word[p])) {
      if (c == word[p] || c == utf8::fold(word[p])) continue;
      ops.push_back(EditOp::substitute(p, c));
    }
  }
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (protected_index(p) || protected_index(p + 1)) continue;
    if (word[p] == word[p + 1]) continue;
    ops.push_back(EditOp::transpose(p));
  }
  return ops;
}

std::pair<std::string, PerturbationTrace> perturb_word(std::string_view word,
                                                       const PerturbSpec& spec,
                                                       const KeyboardLayout& layout, Rng& rng) {
  PerturbationTrace trace;
  trace.original = std::string(word);
  trace.result = trace.original;

  const std::u32string scalars = utf8::decode(word);
  if (scalars.size() < spec.min_word_len) {
    trace.reason = "below-min-word-len";
    return {trace.result, trace};
  }
  const auto ops = enumerate_legal_ops(scalars, spec, layout);
  if (ops.empty()) {
    trace.reason = "no-legal-ops";
    return {trace.result, trace};
  }
  const EditOp& op = ops[rng.below(ops.size())];
  trace.kind = TraceKind::Edit;
  trace.op = op;
  trace.result = utf8::encode(apply_op(op, scalars));
  return {trace.result, trace};
}

PerturbedText perturb_text(std::span<const Token> tokens, const PerturbSpec& spec,
                           const KeyboardLayout& layout, Generator generator) {
  spec.validate();
  PerturbedText out;
  out.tokens.assign(tokens.begin(), tokens.end());
  std::size_t word_index = 0;
  for (auto& token : out.tokens) {
    if (!token.is_word()) continue;
    Rng rng = Rng::for_word(spec.seed, word_index);
    PerturbationTrace trace;
    if (generator == Generator::Edit1) {
      auto [result, t] = perturb_word(token.text, spec, layout, rng);
      token.text = std::move(result);
      trace = std::move(t);
    } else {
      trace.original = token.text;
      const std::u32string scalars = utf8::decode(token.text);
      if (scalars.size() < spec.min_word_len) {
        trace.reason = "below-min-word-len";
      } else {
        JumbleOutcome j = jumble_scalars(scalars, rng);
        trace.kind = TraceKind::Jumble;
        if (!j.changed_possible) {
          trace.kind = TraceKind::Skipped;
          trace.reason = scalars.size() < 4 ? "interior-too-short" : "interior-uniform";
        } else if (j.result == scalars) {
          trace.reason = "identity-after-retries";
        }
        token.text = utf8::encode(j.result);
      }
      trace.result = token.text;
    }
    trace.word_index = word_index++;
    out.traces.push_back(std::move(trace));
  }
  return out;
}

}  // namespace jumble
