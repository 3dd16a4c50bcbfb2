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

#include "jumble/keyboard.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "jumble/error.hpp"
#include "jumble/resources.hpp"
#include "jumble/utf8.hpp"

namespace jumble {
namespace {

std::string quote(char32_t c) { return "'" + utf8::encode(c) + "'"; }

}  // namespace

KeyboardLayout KeyboardLayout::parse(std::string name, std::string_view content) {
  std::map<char32_t, std::u32string> adjacency;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw ValidationError("layout '" + name + "' line " + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'key: neighbour ...'");

    std::istringstream key_in(line.substr(0, colon));
    std::string key_text;
    key_in >> key_text;
    const std::u32string key = utf8::decode(key_text);
    if (key.size() != 1) fail("key '" + key_text + "' is not a single character");
    const char32_t k = utf8::fold(key[0]);
    if (adjacency.contains(k)) fail("duplicate key " + quote(k));

    std::u32string neighbours;
    std::istringstream rest(line.substr(colon + 1));
    std::string item;
    while (rest >> item) {
      const std::u32string n = utf8::decode(item);
      if (n.size() != 1) fail("neighbour '" + item + "' is not a single character");
      const char32_t c = utf8::fold(n[0]);
      if (c == k) fail("key " + quote(k) + " lists itself as a neighbour");
      if (neighbours.find(c) == std::u32string::npos) neighbours.push_back(c);
    }
    std::sort(neighbours.begin(), neighbours.end());
    adjacency.emplace(k, std::move(neighbours));
  }

  for (const auto& [key, neighbours] : adjacency) {
    for (char32_t n : neighbours) {
      const auto it = adjacency.find(n);
      if (it == adjacency.end() || it->second.find(key) == std::u32string::npos) {
        throw ValidationError("layout '" + name + "' is asymmetric: " + quote(key) + " lists " +
                              quote(n) + " but " + quote(n) + " does not list " + quote(key));
      }
    }
  }
  return KeyboardLayout(std::move(name), std::move(adjacency));
}

KeyboardLayout KeyboardLayout::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read layout file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(path, buf.str());
}

KeyboardLayout KeyboardLayout::qwerty() {
  return parse("qwerty", resource("layouts/qwerty.kbd"));
}

const std::u32string& KeyboardLayout::neighbors(char32_t key) const {
  static const std::u32string kNone;
  const auto it = adjacency_.find(utf8::fold(key));
  return it == adjacency_.end() ? kNone : it->second;
}

bool KeyboardLayout::adjacent(char32_t a, char32_t b) const {
  return neighbors(a).find(utf8::fold(b)) != std::u32string::npos;
}

}  // namespace jumble
