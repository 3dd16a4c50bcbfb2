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
#include <string>
#include <string_view>
#include <unordered_map>

#include "jumble/distance.hpp"

namespace jumble {

inline constexpr std::size_t kOracleMaxCap = 4;
inline constexpr std::size_t kOracleMaxLength = 8;

/// Exact edit distance by breadth-first search over the edit graph, applying
/// one legal EditOp per level. This is a verification oracle and deliberately
/// shares no code with the dynamic-programming routines in distance.hpp.
///
/// For Metric::Osa each scalar carries a tag (untouched original, edited, or
/// half of a transposed pair) so that no scalar is edited twice, transposed
/// originals must have been adjacent in the source, and nothing is inserted
/// between a transposed pair.
///
/// Returns nullopt when b is not reachable within `cap` edits (always the case
/// for Hamming with unequal lengths). Throws ValidationError when cap exceeds
/// kOracleMaxCap or either string exceeds kOracleMaxLength scalars.
std::optional<std::size_t> oracle_distance(std::u32string_view a, std::u32string_view b,
                                           Metric metric, std::size_t cap);

std::optional<std::size_t> oracle_distance(std::string_view a, std::string_view b,
                                           Metric metric, std::size_t cap);

/// Every string of at most `max_target_length` scalars reachable from `source`
/// within `cap` edits whose Insert/Substitute payloads come from `alphabet`,
/// mapped to its minimal edit count.
std::unordered_map<std::u32string, std::size_t> oracle_distances_from(
    std::u32string_view source, std::u32string_view alphabet, Metric metric, std::size_t cap,
    std::size_t max_target_length);

}  // namespace jumble
