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
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jumble/edit_op.hpp"
#include "jumble/keyboard.hpp"
#include "jumble/text_model.hpp"

namespace jumble {

/// Which distance-1 edits a generator may apply.
///
///   Unconstrained   any insert/delete/substitute/transpose
///   FixFirst        no op may touch the first scalar
///   FixFirstLast    no op may touch the first or the last scalar
///   QwertyNeighbor  Substitute/Insert payloads must be keyboard-adjacent
enum class ConstraintMode { Unconstrained, FixFirst, FixFirstLast, QwertyNeighbor };

std::string_view to_string(ConstraintMode mode) noexcept;
/// Accepts "unconstrained", "fix-first", "fix-first-last", "qwerty".
std::optional<ConstraintMode> parse_mode(std::string_view name) noexcept;

enum class Generator { Jumble, Edit1 };

std::string_view to_string(Generator generator) noexcept;
std::optional<Generator> parse_generator(std::string_view name) noexcept;

inline constexpr std::u32string_view kLowercaseAlphabet = U"abcdefghijklmnopqrstuvwxyz";

struct PerturbSpec {
  ConstraintMode mode = ConstraintMode::Unconstrained;
  std::size_t distance = 1;
  std::size_t min_word_len = 4;
  std::uint64_t seed = 0;
  std::u32string alphabet{kLowercaseAlphabet};

  /// Throws ValidationError unless distance == 1, min_word_len >= 1 and the
  /// alphabet is non-empty and free of apostrophes.
  void validate() const;
};

/// Seeded random source. Draws are defined entirely by the mt19937_64 output
/// sequence, so results are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for the `word_index`-th word of a text.
  static Rng for_word(std::uint64_t seed, std::uint64_t word_index);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound). bound must be positive.
  std::size_t below(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

enum class TraceKind { Edit, Jumble, Skipped };

std::string_view to_string(TraceKind kind) noexcept;

/// Provenance for one word of a perturbed text.
struct PerturbationTrace {
  std::size_t word_index = 0;
  std::string original;
  std::string result;
  TraceKind kind = TraceKind::Skipped;
  std::optional<EditOp> op;  // set when kind == Edit
  std::string reason;        // set when kind == Skipped, or a jumble fell back to identity
};

/// Shuffles the interior of `word`, keeping the first and last scalar in
/// place. Words with fewer than two interior scalars are returned unchanged;
/// when the interior holds at least two distinct scalars the shuffle is
/// redrawn until it differs from the input.
std::string jumble_word(std::string_view word, Rng& rng);

/// Every distance-1 EditOp on `word` allowed by `spec.mode` and `layout`,
/// in a fixed canonical order. Substitutions that only change letter case
/// are not generated.
std::vector<EditOp> enumerate_legal_ops(std::u32string_view word, const PerturbSpec& spec,
                                        const KeyboardLayout& layout);

/// Applies one op drawn uniformly from enumerate_legal_ops, or returns the
/// word unchanged (Skipped) when it is shorter than spec.min_word_len or has
/// no legal op.
std::pair<std::string, PerturbationTrace> perturb_word(std::string_view word,
                                                       const PerturbSpec& spec,
                                                       const KeyboardLayout& layout, Rng& rng);

struct PerturbedText {
  std::vector<Token> tokens;
  std::vector<PerturbationTrace> traces;  // one per Word token
};

/// Transforms each Word token independently; the k-th word draws from
/// Rng::for_word(spec.seed, k). Non-word tokens pass through unchanged.
/// Jumble honours spec.min_word_len but ignores spec.mode.
PerturbedText perturb_text(std::span<const Token> tokens, const PerturbSpec& spec,
                           const KeyboardLayout& layout, Generator generator);

}  // namespace jumble
