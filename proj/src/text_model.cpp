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

#include "jumble/text_model.hpp"

#include <fstream>
#include <sstream>

#include "jumble/error.hpp"
#include "jumble/resources.hpp"
#include "jumble/utf8.hpp"

namespace jumble {

std::string_view to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Word: return "word";
    case TokenKind::Punct: return "punct";
    case TokenKind::Whitespace: return "whitespace";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  std::vector<Token> tokens;
  auto emit = [&](TokenKind kind, std::size_t begin, std::size_t end) {
    tokens.push_back(Token{kind, utf8::encode(std::u32string_view(cps).substr(begin, end - begin)),
                           tokens.size()});
  };

  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    const char32_t c = cps[i];
    std::size_t j = i + 1;
    if (utf8::is_letter(c)) {
      while (j < n) {
        if (utf8::is_letter(cps[j])) {
          ++j;
        } else if (utf8::is_apostrophe(cps[j]) && j + 1 < n && utf8::is_letter(cps[j + 1])) {
          j += 2;
        } else {
          break;
        }
      }
      emit(TokenKind::Word, i, j);
    } else if (utf8::is_space(c)) {
      while (j < n && utf8::is_space(cps[j])) ++j;
      emit(TokenKind::Whitespace, i, j);
    } else {
      emit(TokenKind::Punct, i, j);
    }
    i = j;
  }
  return tokens;
}

std::string join(std::span<const Token> tokens) {
  std::string out;
  for (const auto& t : tokens) out += t.text;
  return out;
}

std::vector<std::string> words(std::span<const Token> tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (t.is_word()) out.push_back(t.text);
  }
  return out;
}

StopwordLexicon::StopwordLexicon(std::string name, std::span<const std::string> words)
    : name_(std::move(name)) {
  for (const auto& w : words) words_.insert(utf8::fold(w));
}

StopwordLexicon StopwordLexicon::parse(std::string name, std::string_view content) {
  std::vector<std::string> entries;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string entry = line.substr(first, last - first + 1);
    const auto toks = tokenize(entry);
    if (toks.size() != 1 || !toks.front().is_word()) {
      throw ValidationError("lexicon '" + name + "' line " + std::to_string(line_no) +
                            ": '" + entry + "' is not a single word");
    }
    entries.push_back(std::move(entry));
  }
  return StopwordLexicon(std::move(name), entries);
}

StopwordLexicon StopwordLexicon::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read lexicon file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(path, buf.str());
}

StopwordLexicon StopwordLexicon::builtin_default() {
  return parse("default", resource("lexicons/default.txt"));
}

StopwordLexicon StopwordLexicon::builtin_paragraph() {
  return parse("paragraph", resource("lexicons/paragraph_function_words.txt"));
}

bool StopwordLexicon::contains(std::string_view word) const {
  return words_.contains(utf8::fold(word));
}

namespace {

bool is_sentence_final(std::string_view punct) {
  return punct == "." || punct == "!" || punct == "?";
}

}  // namespace

std::vector<Token> strip_stopwords(std::span<const Token> tokens,
                                   const StopwordLexicon& lexicon) {
  if (lexicon.empty()) {
    throw ValidationError("stopword lexicon '" + lexicon.name() + "' is empty");
  }
  std::vector<Token> out;
  // A sentence terminator is kept only once per run of surviving words.
  bool words_since_terminator = false;
  for (const auto& t : tokens) {
    if (t.is_word()) {
      if (lexicon.contains(t.text)) continue;
      if (!out.empty()) out.push_back(Token{TokenKind::Whitespace, " ", 0});
      out.push_back(Token{TokenKind::Word, t.text, 0});
      words_since_terminator = true;
    } else if (t.kind == TokenKind::Punct && is_sentence_final(t.text) &&
               words_since_terminator) {
      out.push_back(Token{TokenKind::Punct, t.text, 0});
      words_since_terminator = false;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].index = i;
  return out;
}

}  // namespace jumble
