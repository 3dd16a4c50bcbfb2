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

#include <cstddef>
#include <optional>
#include <string_view>

namespace jumble {

/// Unit-cost edit distance variants.
///
///   Levenshtein         insert, delete, substitute
///   Osa                 + adjacent transposition, no substring edited twice
///   DamerauLevenshtein  + adjacent transposition, unrestricted (a true metric)
///   Hamming             substitute only, equal lengths
///
/// Osa and DamerauLevenshtein agree at distance 1 but diverge above it:
/// ("ca", "abc") is 3 under Osa and 2 under DamerauLevenshtein.
enum class Metric { Levenshtein, Osa, DamerauLevenshtein, Hamming };

std::string_view to_string(Metric metric) noexcept;

/// Accepts "levenshtein", "osa", "damerau-levenshtein" (or "dl"), "hamming".
std::optional<Metric> parse_metric(std::string_view name) noexcept;

struct DistanceOptions {
  bool fold_case = false;
};

/// Minimum number of unit-cost operations of `metric` turning a into b,
/// computed over Unicode scalars. Hamming throws ValidationError when the
/// scalar lengths differ.
std::size_t distance(std::u32string_view a, std::u32string_view b, Metric metric,
                     DistanceOptions options = {});

/// UTF-8 convenience overload.
std::size_t distance(std::string_view a, std::string_view b, Metric metric,
                     DistanceOptions options = {});

std::size_t levenshtein(std::u32string_view a, std::u32string_view b);
std::size_t osa(std::u32string_view a, std::u32string_view b);
std::size_t damerau_levenshtein(std::u32string_view a, std::u32string_view b);
std::size_t hamming(std::u32string_view a, std::u32string_view b);

}  // namespace jumble
