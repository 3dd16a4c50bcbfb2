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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace jumble {

enum class EditKind { Insert, Delete, Substitute, TransposeAdjacent };

std::string_view to_string(EditKind kind) noexcept;

/// One unit-cost edit. `position` is a 0-based scalar index into the string
/// the op applies to; Insert may use position == size (append).
/// TransposeAdjacent at i swaps scalars i and i+1.
struct EditOp {
  EditKind kind = EditKind::Insert;
  std::size_t position = 0;
  std::optional<char32_t> payload;  // Insert/Substitute only

  static EditOp insert(std::size_t pos, char32_t c) { return {EditKind::Insert, pos, c}; }
  static EditOp erase(std::size_t pos) { return {EditKind::Delete, pos, std::nullopt}; }
  static EditOp substitute(std::size_t pos, char32_t c) {
    return {EditKind::Substitute, pos, c};
  }
  static EditOp transpose(std::size_t pos) {
    return {EditKind::TransposeAdjacent, pos, std::nullopt};
  }

  friend auto operator<=>(const EditOp&, const EditOp&) = default;
};

/// Whether `op` is well formed for `word` and changes it: position in range,
/// payload present exactly when required, Substitute payload differs from the
/// replaced scalar, transposed scalars differ.
bool is_applicable(const EditOp& op, std::u32string_view word) noexcept;

/// Applies `op`. Throws ValidationError when !is_applicable(op, word).
std::u32string apply_op(const EditOp& op, std::u32string_view word);
std::string apply_op(const EditOp& op, std::string_view utf8_word);

/// Human-readable form, e.g. `substitute(2,'d')`, `delete(0)`.
std::string describe(const EditOp& op);

}  // namespace jumble
