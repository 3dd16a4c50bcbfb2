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

#include "jumble/edit_op.hpp"

#include "jumble/error.hpp"
#include "jumble/utf8.hpp"

namespace jumble {

std::string_view to_string(EditKind kind) noexcept {
  switch (kind) {
    case EditKind::Insert: return "insert";
    case EditKind::Delete: return "delete";
    case EditKind::Substitute: return "substitute";
    case EditKind::TransposeAdjacent: return "transpose";
  }
  return "?";
}

bool is_applicable(const EditOp& op, std::u32string_view word) noexcept {
  const std::size_t n = word.size();
  switch (op.kind) {
    case EditKind::Insert:
      return op.payload.has_value() && op.position <= n;
    case EditKind::Delete:
      return !op.payload && op.position < n;
    case EditKind::Substitute:
      return op.payload.has_value() && op.position < n && word[op.position] != *op.payload;
    case EditKind::TransposeAdjacent:
      return !op.payload && op.position + 1 < n && word[op.position] != word[op.position + 1];
  }
  return false;
}

std::u32string apply_op(const EditOp& op, std::u32string_view word) {
  if (!is_applicable(op, word)) {
    throw ValidationError(describe(op) + " is not applicable to '" + utf8::encode(word) + "'");
  }
  std::u32string out(word);
  switch (op.kind) {
    case EditKind::Insert: out.insert(out.begin() + op.position, *op.payload); break;
    case EditKind::Delete: out.erase(op.position, 1); break;
    case EditKind::Substitute: out[op.position] = *op.payload; break;
    case EditKind::TransposeAdjacent: std::swap(out[op.position], out[op.position + 1]); break;
  }
  return out;
}

std::string apply_op(const EditOp& op, std::string_view utf8_word) {
  return utf8::encode(apply_op(op, utf8::decode(utf8_word)));
}

std::string describe(const EditOp& op) {
  std::string s(to_string(op.kind));
  s += '(' + std::to_string(op.position);
  if (op.payload) s += ",'" + utf8::encode(*op.payload) + "'";
  s += ')';
  return s;
}

}  // namespace jumble
