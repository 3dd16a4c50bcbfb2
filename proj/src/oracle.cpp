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

#include "jumble/oracle.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "jumble/error.hpp"
#include "jumble/utf8.hpp"

namespace jumble {
namespace {

// Tagged cell for the OSA search: scalar in the high 21 bits, a 2-bit state
// and a 9-bit source index in the low 11 bits.
enum CellState : char32_t { kOriginal = 0, kEdited = 1, kPairLeft = 2, kPairRight = 3 };

constexpr char32_t make_cell(char32_t c, char32_t state, char32_t source_index) {
  return (c << 11) | (state << 9) | source_index;
}
constexpr char32_t cell_char(char32_t cell) { return cell >> 11; }
constexpr char32_t cell_state(char32_t cell) { return (cell >> 9) & 3; }
constexpr char32_t cell_index(char32_t cell) { return cell & 0x1FF; }

std::u32string project(const std::u32string& cells) {
  std::u32string out(cells.size(), 0);
  std::transform(cells.begin(), cells.end(), out.begin(), cell_char);
  return out;
}

std::size_t locked_cells(const std::u32string& cells) {
  return static_cast<std::size_t>(std::count_if(
      cells.begin(), cells.end(), [](char32_t c) { return cell_state(c) != kOriginal; }));
}

// Successor states under the OSA restriction.
void osa_successors(const std::u32string& s, std::u32string_view alphabet,
                    std::vector<std::u32string>& out) {
  const std::size_t n = s.size();
  for (std::size_t p = 0; p <= n; ++p) {
    if (p > 0 && p < n && cell_state(s[p - 1]) == kPairLeft) continue;
    for (char32_t c : alphabet) {
      std::u32string t = s;
      t.insert(t.begin() + p, make_cell(c, kEdited, 0));
      out.push_back(std::move(t));
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (cell_state(s[p]) != kOriginal) continue;
    std::u32string del = s;
    del.erase(p, 1);
    out.push_back(std::move(del));
    for (char32_t c : alphabet) {
      if (c == cell_char(s[p])) continue;
      std::u32string t = s;
      t[p] = make_cell(c, kEdited, 0);
      out.push_back(std::move(t));
    }
    if (p + 1 < n && cell_state(s[p + 1]) == kOriginal &&
        cell_index(s[p]) + 1 == cell_index(s[p + 1]) &&
        cell_char(s[p]) != cell_char(s[p + 1])) {
      std::u32string t = s;
      t[p] = make_cell(cell_char(s[p + 1]), kPairLeft, cell_index(s[p]));
      t[p + 1] = make_cell(cell_char(s[p]), kPairRight, cell_index(s[p + 1]));
      out.push_back(std::move(t));
    }
  }
}

void plain_successors(const std::u32string& s, std::u32string_view alphabet, Metric metric,
                      std::vector<std::u32string>& out) {
  const std::size_t n = s.size();
  const bool indels = metric != Metric::Hamming;
  const bool transpose = metric == Metric::DamerauLevenshtein;
  if (indels) {
    for (std::size_t p = 0; p <= n; ++p) {
      for (char32_t c : alphabet) {
        std::u32string t = s;
        t.insert(t.begin() + p, c);
        out.push_back(std::move(t));
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (indels) {
      std::u32string t = s;
      t.erase(p, 1);
      out.push_back(std::move(t));
    }
    for (char32_t c : alphabet) {
      if (c == s[p]) continue;
      std::u32string t = s;
      t[p] = c;
      out.push_back(std::move(t));
    }
    if (transpose && p + 1 < n && s[p] != s[p + 1]) {
      std::u32string t = s;
      std::swap(t[p], t[p + 1]);
      out.push_back(std::move(t));
    }
  }
}

void check_limits(std::size_t length, std::size_t cap) {
  if (cap > kOracleMaxCap) {
    throw ValidationError("oracle cap " + std::to_string(cap) + " exceeds " +
                          std::to_string(kOracleMaxCap));
  }
  if (length > kOracleMaxLength) {
    throw ValidationError("oracle input of " + std::to_string(length) +
                          " scalars exceeds " + std::to_string(kOracleMaxLength));
  }
}

}  // namespace

std::unordered_map<std::u32string, std::size_t> oracle_distances_from(
    std::u32string_view source, std::u32string_view alphabet, Metric metric, std::size_t cap,
    std::size_t max_target_length) {
  check_limits(source.size(), cap);
  const bool tagged = metric == Metric::Osa;

  std::u32string start;
  if (tagged) {
    for (std::size_t i = 0; i < source.size(); ++i) {
      start.push_back(make_cell(source[i], kOriginal, static_cast<char32_t>(i)));
    }
  } else {
    start = source;
  }

  std::unordered_map<std::u32string, std::size_t> reached;
  std::unordered_set<std::u32string> seen{start};
  std::vector<std::u32string> frontier{start};
  std::vector<std::u32string> successors;

  for (std::size_t depth = 0;; ++depth) {
    for (const auto& state : frontier) {
      std::u32string plain = tagged ? project(state) : state;
      if (plain.size() <= max_target_length) reached.try_emplace(std::move(plain), depth);
    }
    if (depth == cap) break;

    const std::size_t budget = cap - depth - 1;
    std::vector<std::u32string> next;
    for (const auto& state : frontier) {
      successors.clear();
      if (tagged) {
        osa_successors(state, alphabet, successors);
      } else {
        plain_successors(state, alphabet, metric, successors);
      }
      for (auto& t : successors) {
        // Prune states that can no longer shrink to a target length in budget.
        if (t.size() > max_target_length + budget) continue;
        if (tagged && locked_cells(t) > max_target_length) continue;
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return reached;
}

std::optional<std::size_t> oracle_distance(std::u32string_view a, std::u32string_view b,
                                           Metric metric, std::size_t cap) {
  check_limits(std::max(a.size(), b.size()), cap);
  if (metric == Metric::Hamming && a.size() != b.size()) return std::nullopt;

  // Insert/Substitute payloads outside chars(a) u chars(b) never shorten a path.
  std::u32string alphabet(a);
  alphabet += b;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

  const auto reached = oracle_distances_from(a, alphabet, metric, cap, b.size());
  const auto it = reached.find(std::u32string(b));
  if (it == reached.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> oracle_distance(std::string_view a, std::string_view b,
                                           Metric metric, std::size_t cap) {
  return oracle_distance(utf8::decode(a), utf8::decode(b), metric, cap);
}

}  // namespace jumble
