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
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace jumble {

enum class TokenKind { Word, Punct, Whitespace };

std::string_view to_string(TokenKind kind) noexcept;

/// A classified span of source text. `text` is UTF-8.
struct Token {
  TokenKind kind = TokenKind::Word;
  std::string text;
  std::size_t index = 0;  // ordinal in the token stream

  bool is_word() const noexcept { return kind == TokenKind::Word; }
  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits text into Word, Punct and Whitespace tokens.
///
/// A Word is a maximal run of letters, where an apostrophe counts as part
/// of the word only when a letter sits on both sides of it ("doesn't").
/// Whitespace tokens are maximal runs. Every other scalar (digits, hyphens,
/// stray apostrophes, punctuation) is a one-scalar Punct token.
/// Concatenating the token texts reproduces the input exactly.
std::vector<Token> tokenize(std::string_view text);

/// Concatenation of token texts.
std::string join(std::span<const Token> tokens);

/// Texts of the Word tokens, in order.
std::vector<std::string> words(std::span<const Token> tokens);

/// A set of function words with case-insensitive membership.
class StopwordLexicon {
 public:
  StopwordLexicon(std::string name, std::span<const std::string> words);

  /// Parses the lexicon file format: one word per line, `#` starts a
  /// comment, blank lines are ignored. Throws ValidationError on entries
  /// that are not single words.
  static StopwordLexicon parse(std::string name, std::string_view content);
  static StopwordLexicon load(const std::string& path);

  /// Small general-purpose English list.
  static StopwordLexicon builtin_default();
  /// The function words removed from the reference paragraph fixture.
  static StopwordLexicon builtin_paragraph();

  bool contains(std::string_view word) const;
  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

 private:
  std::string name_;
  std::unordered_set<std::string> words_;  // case-folded
};

/// Removes lexicon words and rebuilds the stream as surviving words joined
/// by single spaces. Sentence-final punctuation (. ! ?) is kept, attached to
/// the preceding surviving word; other punctuation is dropped. Surviving
/// words keep their original case. Throws ValidationError on an empty lexicon.
std::vector<Token> strip_stopwords(std::span<const Token> tokens,
                                   const StopwordLexicon& lexicon);

}  // namespace jumble
