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

#include "jumble/distance.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "jumble/error.hpp"
#include "jumble/utf8.hpp"

namespace jumble {

std::string_view to_string(Metric metric) noexcept {
  switch (metric) {
    case Metric::Levenshtein: return "levenshtein";
    case Metric::Osa: return "osa";
    case Metric::DamerauLevenshtein: return "damerau-levenshtein";
    case Metric::Hamming: return "hamming";
  }
  return "?";
}

std::optional<Metric> parse_metric(std::string_view name) noexcept {
  if (name == "levenshtein") return Metric::Levenshtein;
  if (name == "osa") return Metric::Osa;
  if (name == "damerau-levenshtein" || name == "dl") return Metric::DamerauLevenshtein;
  if (name == "hamming") return Metric::Hamming;
  return std::nullopt;
}

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0u : 1u)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t osa(std::u32string_view a, std::u32string_view b) {
  const std::size_t m = b.size();
  // Three rolling rows: i-2, i-1, i.
  std::vector<std::size_t> prev2(m + 1), prev(m + 1), cur(m + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        cur[j] = std::min(cur[j], prev2[j - 2] + 1);
      }
    }
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return prev[m];
}

// Lowrance-Wagner: unrestricted adjacent transpositions, with the last row
// in which each scalar of `a` was seen.
std::size_t damerau_levenshtein(std::u32string_view a, std::u32string_view b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t inf = n + m;
  const std::size_t width = m + 2;
  std::vector<std::size_t> d((n + 2) * width);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return d[i * width + j]; };

  at(0, 0) = inf;
  for (std::size_t i = 0; i <= n; ++i) {
    at(i + 1, 0) = inf;
    at(i + 1, 1) = i;
  }
  for (std::size_t j = 0; j <= m; ++j) {
    at(0, j + 1) = inf;
    at(1, j + 1) = j;
  }

  std::unordered_map<char32_t, std::size_t> last_row;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t last_match_col = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      const auto it = last_row.find(b[j - 1]);
      const std::size_t i1 = it == last_row.end() ? 0 : it->second;
      const std::size_t j1 = last_match_col;
      std::size_t cost = 1;
      if (a[i - 1] == b[j - 1]) {
        cost = 0;
        last_match_col = j;
      }
      at(i + 1, j + 1) = std::min({at(i, j) + cost, at(i + 1, j) + 1, at(i, j + 1) + 1,
                                   at(i1, j1) + (i - i1 - 1) + 1 + (j - j1 - 1)});
    }
    last_row[a[i - 1]] = i;
  }
  return at(n + 1, m + 1);
}

std::size_t hamming(std::u32string_view a, std::u32string_view b) {
  if (a.size() != b.size()) {
    throw ValidationError("hamming distance requires equal lengths (got " +
                          std::to_string(a.size()) + " and " + std::to_string(b.size()) + ")");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::size_t distance(std::u32string_view a, std::u32string_view b, Metric metric,
                     DistanceOptions options) {
  if (options.fold_case) {
    const std::u32string fa = utf8::fold(a);
    const std::u32string fb = utf8::fold(b);
    return distance(fa, fb, metric, {});
  }
  switch (metric) {
    case Metric::Levenshtein: return levenshtein(a, b);
    case Metric::Osa: return osa(a, b);
    case Metric::DamerauLevenshtein: return damerau_levenshtein(a, b);
    case Metric::Hamming: return hamming(a, b);
  }
  throw Error("unknown metric");
}

std::size_t distance(std::string_view a, std::string_view b, Metric metric,
                     DistanceOptions options) {
  return distance(utf8::decode(a), utf8::decode(b), metric, options);
}

}  // namespace jumble
