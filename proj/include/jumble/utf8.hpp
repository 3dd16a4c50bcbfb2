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

#include <string>
#include <string_view>

namespace jumble::utf8 {

/// Decodes UTF-8 into Unicode scalar values. Throws ValidationError on
/// malformed input (overlongs, surrogates, truncated sequences).
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view text);
std::string encode(char32_t c);

/// Letters: ASCII letters plus the alphabetic blocks of Latin-1, Latin
/// Extended, Greek, Cyrillic, Armenian, Hebrew, Arabic and the CJK/kana ranges.
bool is_letter(char32_t c) noexcept;

bool is_space(char32_t c) noexcept;

/// ASCII apostrophe or U+2019 RIGHT SINGLE QUOTATION MARK.
bool is_apostrophe(char32_t c) noexcept;

/// Simple one-to-one lowercase mapping for ASCII, Latin-1, Latin Extended-A,
/// Greek and Cyrillic capitals. Other scalars map to themselves.
char32_t fold(char32_t c) noexcept;

std::u32string fold(std::u32string_view text);
std::string fold(std::string_view text);

}  // namespace jumble::utf8
