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

#include "jumble/resources.hpp"

#include <string>
#include <utility>

#include "jumble/error.hpp"

namespace jumble {
namespace detail {
extern const std::pair<std::string_view, std::string_view> kResources[];
extern const std::size_t kResourceCount;
}  // namespace detail

std::string_view resource(std::string_view name) {
  for (std::size_t i = 0; i < detail::kResourceCount; ++i) {
    if (detail::kResources[i].first == name) return detail::kResources[i].second;
  }
  throw ValidationError("unknown built-in resource '" + std::string(name) + "'");
}

std::vector<std::string_view> resource_names() {
  std::vector<std::string_view> names;
  for (std::size_t i = 0; i < detail::kResourceCount; ++i) {
    names.push_back(detail::kResources[i].first);
  }
  return names;
}

}  // namespace jumble
