// Copyright 2026 The mrpred Authors.
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

// Source files and a comment-aware tokenizer for Java, C++ and Python.

#ifndef MRPRED_LEXER_HPP_
#define MRPRED_LEXER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mrpred::miner {

enum class Language { kJava, kCpp, kPython };

std::string_view LanguageName(Language language);

// Maps a path's extension to a language. `.java`, `.cpp`/`.cc`/`.cxx`/`.hpp`
// /`.h`, `.py`; anything else yields nullopt.
std::optional<Language> LanguageFromPath(std::string_view path);

struct SourceFile {
  std::string path;
  Language language;
  std::string content;
  int line_count = 0;

  // Throws ValidationError for an unrecognized extension.
  static SourceFile FromText(std::string path, std::string content);
  // Throws IoError if the file cannot be read.
  static SourceFile Load(const std::string& path);

  // Lowercased extension without the dot ("java", "cpp", "py", ...).
  std::string Extension() const;
};

// Number of newline-delimited lines; a trailing partial line counts as one.
int CountLines(std::string_view content);

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kNumericLiteral,
  kStringLiteral,
  kCharLiteral,
  kOperator,
  kPunctuation,
};

std::string_view TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  int line = 1;      // 1-based line of the first character
  int end_line = 1;  // differs from `line` only for multi-line literals
  int column = 1;    // 1-based
  bool space_before = false;        // whitespace or a comment precedes it
  bool logical_line_start = false;  // first token of a logical line

  bool Is(std::string_view s) const { return text == s; }
  bool IsWord() const {
    return kind == TokenKind::kKeyword || kind == TokenKind::kIdentifier;
  }
};

enum class LineKind { kBlank, kCommentOnly, kCode };

struct LexResult {
  std::vector<Token> tokens;
  // lines[i] describes physical line i + 1.
  std::vector<LineKind> lines;
};

// Throws LexError for unterminated comments or string literals.
LexResult Lex(const SourceFile& file);

bool IsKeyword(Language language, std::string_view word);

}  // namespace mrpred::miner

#endif  // MRPRED_LEXER_HPP_
