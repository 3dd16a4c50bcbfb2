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

#include <string_view>
#include <vector>

namespace jumble {

/// Fixture data compiled into the library, keyed by its path under data/
/// (e.g. "corpus/words100.txt", "layouts/qwerty.kbd") or "schema/<file>".
/// Throws ValidationError for an unknown name.
std::string_view resource(std::string_view name);

std::vector<std::string_view> resource_names();

}  // namespace jumble
