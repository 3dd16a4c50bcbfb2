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

#include <map>
#include <string>
#include <string_view>

namespace jumble {

/// Symmetric key-adjacency relation used to model fat-finger typos.
class KeyboardLayout {
 public:
  /// Parses `key: neighbour neighbour ...` lines (`#` comments, blank lines
  /// ignored; keys and neighbours are single scalars, stored case-folded).
  /// Throws ValidationError on malformed lines, duplicate keys, self-adjacency
  /// or an asymmetric table; the asymmetry message names the offending pair.
  static KeyboardLayout parse(std::string name, std::string_view content);
  static KeyboardLayout load(const std::string& path);

  /// Three-row QWERTY letter block shipped in data/layouts/qwerty.kbd.
  static KeyboardLayout qwerty();

  /// Neighbours of `key` (case-folded lookup); empty for unknown keys.
  const std::u32string& neighbors(char32_t key) const;
  bool adjacent(char32_t a, char32_t b) const;

  const std::string& name() const noexcept { return name_; }
  const std::map<char32_t, std::u32string>& adjacency() const noexcept { return adjacency_; }

 private:
  KeyboardLayout(std::string name, std::map<char32_t, std::u32string> adjacency)
      : name_(std::move(name)), adjacency_(std::move(adjacency)) {}

  std::string name_;
  std::map<char32_t, std::u32string> adjacency_;  // neighbours sorted
};

}  // namespace jumble
