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

#include "mrpred/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "mrpred/errors.hpp"

namespace mrpred::miner {
namespace {

const std::unordered_set<std::string_view>& JavaKeywords() {
  static const std::unordered_set<std::string_view> kWords = {
      "abstract",   "assert",       "boolean",   "break",      "byte",
      "case",       "catch",        "char",      "class",      "const",
      "continue",   "default",      "do",        "double",     "else",
      "enum",       "extends",      "final",     "finally",    "float",
      "for",        "goto",         "if",        "implements", "import",
      "instanceof", "int",          "interface", "long",       "native",
      "new",        "package",      "private",   "protected",  "public",
      "return",     "short",        "static",    "strictfp",   "super",
      "switch",     "synchronized", "this",      "throw",      "throws",
      "transient",  "try",          "void",      "volatile",   "while",
      "true",       "false",        "null"};
  return kWords;
}

const std::unordered_set<std::string_view>& CppKeywords() {
  static const std::unordered_set<std::string_view> kWords = {
      "alignas",       "alignof",     "and",
      "and_eq",        "asm",         "auto",
      "bitand",        "bitor",       "bool",
      "break",         "case",        "catch",
      "char",          "char8_t",     "char16_t",
      "char32_t",      "class",       "compl",
      "concept",       "const",       "consteval",
      "constexpr",     "constinit",   "const_cast",
      "continue",      "co_await",    "co_return",
      "co_yield",      "decltype",    "default",
      "delete",        "do",          "double",
      "dynamic_cast",  "else",        "enum",
      "explicit",      "export",      "extern",
      "false",         "float",       "for",
      "friend",        "goto",        "if",
      "inline",        "int",         "long",
      "mutable",       "namespace",   "new",
      "noexcept",      "not",         "not_eq",
      "nullptr",       "operator",    "or",
      "or_eq",         "private",     "protected",
      "public",        "register",    "reinterpret_cast",
      "requires",      "return",      "short",
      "signed",        "sizeof",      "static",
      "static_assert", "static_cast", "struct",
      "switch",        "template",    "this",
      "thread_local",  "throw",       "true",
      "try",           "typedef",     "typeid",
      "typename",      "union",       "unsigned",
      "using",         "virtual",     "void",
      "volatile",      "wchar_t",     "while",
      "xor",           "xor_eq"};
  return kWords;
}

const std::unordered_set<std::string_view>& PythonKeywords() {
  static const std::unordered_set<std::string_view> kWords = {
      "False",  "None",   "True",    "and",      "as",       "assert", "async",
      "await",  "break",  "class",   "continue", "def",      "del",    "elif",
      "else",   "except", "finally", "for",      "from",     "global", "if",
      "import", "in",     "is",      "lambda",   "nonlocal", "not",    "or",
      "pass",   "raise",  "return",  "try",      "while",    "with",   "yield"};
  return kWords;
}

struct Symbol {
  std::string_view text;
  TokenKind kind;
};

std::vector<Symbol> SortedSymbols(std::vector<std::string_view> operators,
                                  std::vector<std::string_view> punctuation) {
  std::vector<Symbol> symbols;
  for (auto op : operators) symbols.push_back({op, TokenKind::kOperator});
  for (auto p : punctuation) symbols.push_back({p, TokenKind::kPunctuation});
  std::stable_sort(symbols.begin(), symbols.end(),
                   [](const Symbol& a, const Symbol& b) {
                     return a.text.size() > b.text.size();
                   });
  return symbols;
}

const std::vector<Symbol>& SymbolsFor(Language language) {
  static const std::vector<Symbol> kJava = SortedSymbols(
      {">>>=", "<<=", ">>=", ">>>", "->", "::", "++", "--", "&&", "||",
       "==",   "!=",  "<=",  ">=",  "+=", "-=", "*=", "/=", "%=", "&=",
       "|=",   "^=",  "<<",  ">>",  "+",  "-",  "*",  "/",  "%",  "=",
       "<",    ">",   "!",   "~",   "?",  ":",  "&",  "|",  "^"},
      {"...", "(", ")", "{", "}", "[", "]", ";", ",", ".", "@"});
  static const std::vector<Symbol> kCpp = SortedSymbols(
      {"<=>", "<<=", ">>=", "->*", "->", "::", "++", "--", "&&", "||",
       "==",  "!=",  "<=",  ">=",  "+=", "-=", "*=", "/=", "%=", "&=",
       "|=",  "^=",  "<<",  ">>",  ".*", "+",  "-",  "*",  "/",  "%",
       "=",   "<",   ">",   "!",   "~",  "?",  ":",  "&",  "|",  "^"},
      {"...", "##", "(", ")", "{", "}", "[", "]", ";", ",", ".", "#"});
  static const std::vector<Symbol> kPython = SortedSymbols(
      {"**=", "//=", ">>=", "<<=", "**", "//", "->", ":=", "==", "!=",
       "<=",  ">=",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=",
       "@=",  "<<",  ">>",  "+",   "-",  "*",  "/",  "%",  "@",  "=",
       "<",   ">",   "!",   "~",   "&",  "|",  "^"},
      {"...", "(", ")", "{", "}", "[", "]", ";", ",", ".", ":"});
  switch (language) {
    case Language::kJava:
      return kJava;
    case Language::kCpp:
      return kCpp;
    case Language::kPython:
      return kPython;
  }
  return kJava;
}

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool IsIdentChar(char c) {
  return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c));
}

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

class Lexer {
 public:
  explicit Lexer(const SourceFile& file)
      : file_(file),
        src_(file.content),
        line_has_code_(static_cast<size_t>(file.line_count) + 2, false),
        line_has_comment_(static_cast<size_t>(file.line_count) + 2, false) {}

  LexResult Run() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        NewLine();
        continue;
      }
      if (c == '\r' || c == ' ' || c == '\t' || c == '\f' || c == '\v') {
        Advance();
        space_ = true;
        continue;
      }
      if (c == '\\' && Peek(1) == '\n') {
        // Explicit line continuation (Python) or macro continuation (C++).
        Mark(line_has_code_, line_);
        Advance();
        continuation_ = true;
        continue;
      }
      if (python() && c == '#') {
        SkipLineComment();
        continue;
      }
      if (!python() && c == '/' && Peek(1) == '/') {
        SkipLineComment();
        continue;
      }
      if (!python() && c == '/' && Peek(1) == '*') {
        SkipBlockComment();
        continue;
      }
      if (IsDigit(c) || (c == '.' && IsDigit(Peek(1)))) {
        LexNumber();
        continue;
      }
      if (IsIdentStart(c)) {
        LexWord();
        continue;
      }
      if (c == '"' || (c == '\'' && python())) {
        LexString(pos_, c);
        continue;
      }
      if (c == '\'') {
        LexCharLiteral();
        continue;
      }
      LexSymbol();
    }
    LexResult result;
    result.tokens = std::move(tokens_);
    result.lines.reserve(static_cast<size_t>(file_.line_count));
    for (int l = 1; l <= file_.line_count; ++l) {
      if (line_has_code_[static_cast<size_t>(l)]) {
        result.lines.push_back(LineKind::kCode);
      } else if (line_has_comment_[static_cast<size_t>(l)]) {
        result.lines.push_back(LineKind::kCommentOnly);
      } else {
        result.lines.push_back(LineKind::kBlank);
      }
    }
    return result;
  }

 private:
  bool python() const { return file_.language == Language::kPython; }

  char Peek(size_t offset) const {
    return pos_ + offset < src_.size() ? src_[pos_ + offset] : '\0';
  }

  void Advance() {
    ++pos_;
    ++column_;
  }

  void NewLine() {
    ++pos_;
    ++line_;
    column_ = 1;
    space_ = true;
    if (!continuation_ && (!python() || depth_ == 0)) at_line_start_ = true;
    continuation_ = false;
  }

  static void Mark(std::vector<bool>& lines, int line) {
    if (line >= 0 && static_cast<size_t>(line) < lines.size()) {
      lines[static_cast<size_t>(line)] = true;
    }
  }

  void Emit(TokenKind kind, size_t begin, int line, int column) {
    Token token;
    token.kind = kind;
    token.text.assign(src_.substr(begin, pos_ - begin));
    token.line = line;
    token.end_line = line_;
    token.column = column;
    token.space_before = space_;
    token.logical_line_start = at_line_start_;
    for (int l = line; l <= line_; ++l) Mark(line_has_code_, l);
    space_ = false;
    at_line_start_ = false;
    if (python() && kind == TokenKind::kPunctuation) {
      if (token.text == "(" || token.text == "[" || token.text == "{") {
        ++depth_;
      } else if ((token.text == ")" || token.text == "]" ||
                  token.text == "}") &&
                 depth_ > 0) {
        --depth_;
      }
    }
    tokens_.push_back(std::move(token));
  }

  void SkipLineComment() {
    Mark(line_has_comment_, line_);
    while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
    space_ = true;
  }

  void SkipBlockComment() {
    const int start_line = line_;
    Mark(line_has_comment_, line_);
    pos_ += 2;
    column_ += 2;
    while (true) {
      if (pos_ >= src_.size()) {
        throw LexError("unterminated block comment", start_line);
      }
      if (src_[pos_] == '*' && Peek(1) == '/') {
        pos_ += 2;
        column_ += 2;
        break;
      }
      if (src_[pos_] == '\n') {
        ++pos_;
        ++line_;
        column_ = 1;
        Mark(line_has_comment_, line_);
      } else {
        Advance();
      }
    }
    space_ = true;
  }

  void LexNumber() {
    const size_t begin = pos_;
    const int column = column_;
    const bool hex = src_[pos_] == '0' && (Peek(1) == 'x' || Peek(1) == 'X');
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (IsIdentChar(c) || c == '.') {
        Advance();
      } else if ((c == '+' || c == '-') && pos_ > begin) {
        char prev = src_[pos_ - 1];
        bool exponent =
            hex ? (prev == 'p' || prev == 'P') : (prev == 'e' || prev == 'E');
        if (!exponent) break;
        Advance();
      } else if (c == '\'' && !python() && IsIdentChar(Peek(1))) {
        Advance();  // C++14 digit separator
      } else {
        break;
      }
    }
    Emit(TokenKind::kNumericLiteral, begin, line_, column);
  }

  void LexWord() {
    const size_t begin = pos_;
    const int column = column_;
    while (pos_ < src_.size() && IsIdentChar(src_[pos_])) Advance();
    std::string_view word = src_.substr(begin, pos_ - begin);
    char next = pos_ < src_.size() ? src_[pos_] : '\0';
    if (next == '"' || next == '\'') {
      if (python()) {
        static const std::unordered_set<std::string_view> kPrefixes = {
            "r", "u", "b", "f", "br", "rb", "fr", "rf"};
        if (kPrefixes.count(Lower(word))) {
          LexString(begin, next);
          return;
        }
      } else if (file_.language == Language::kCpp) {
        if (word == "R" || word == "u8R" || word == "uR" || word == "UR" ||
            word == "LR") {
          if (next == '"') {
            LexRawString(begin);
            return;
          }
        }
        if (word == "u8" || word == "u" || word == "U" || word == "L") {
          if (next == '"') {
            LexString(begin, '"');
          } else {
            LexCharLiteral(begin);
          }
          return;
        }
      }
    }
    Emit(IsKeyword(file_.language, word) ? TokenKind::kKeyword
                                         : TokenKind::kIdentifier,
         begin, line_, column);
  }

  // `begin` may precede pos_ when a prefix was consumed.
  void LexString(size_t begin, char quote) {
    const int start_line = line_;
    const int column = column_ - static_cast<int>(pos_ - begin);
    const bool triple =
        (python() || (file_.language == Language::kJava && quote == '"')) &&
        Peek(1) == quote && Peek(2) == quote;
    if (triple) {
      pos_ += 3;
      column_ += 3;
      while (true) {
        if (pos_ >= src_.size()) {
          throw LexError("unterminated string literal", start_line);
        }
        char c = src_[pos_];
        if (c == '\\') {
          Advance();
          if (pos_ < src_.size() && src_[pos_] == '\n') {
            ++pos_;
            ++line_;
            column_ = 1;
          } else {
            Advance();
          }
          continue;
        }
        if (c == quote && Peek(1) == quote && Peek(2) == quote) {
          pos_ += 3;
          column_ += 3;
          break;
        }
        if (c == '\n') {
          ++pos_;
          ++line_;
          column_ = 1;
        } else {
          Advance();
        }
      }
    } else {
      Advance();
      while (true) {
        if (pos_ >= src_.size() || src_[pos_] == '\n') {
          throw LexError("unterminated string literal", start_line);
        }
        char c = src_[pos_];
        if (c == '\\') {
          Advance();
          if (pos_ < src_.size() && src_[pos_] == '\n') {
            ++pos_;
            ++line_;
            column_ = 1;
          } else if (pos_ < src_.size()) {
            Advance();
          }
          continue;
        }
        Advance();
        if (c == quote) break;
      }
    }
    Emit(TokenKind::kStringLiteral, begin, start_line, column);
  }

  void LexRawString(size_t begin) {
    const int start_line = line_;
    const int column = column_ - static_cast<int>(pos_ - begin);
    Advance();  // opening quote
    std::string delimiter;
    while (pos_ < src_.size() && src_[pos_] != '(') {
      if (src_[pos_] == '\n') {
        throw LexError("malformed raw string literal", start_line);
      }
      delimiter.push_back(src_[pos_]);
      Advance();
    }
    const std::string terminator = ")" + delimiter + "\"";
    size_t end = src_.find(terminator, pos_);
    if (end == std::string_view::npos) {
      throw LexError("unterminated raw string literal", start_line);
    }
    end += terminator.size();
    while (pos_ < end) {
      if (src_[pos_] == '\n') {
        ++pos_;
        ++line_;
        column_ = 1;
      } else {
        Advance();
      }
    }
    Emit(TokenKind::kStringLiteral, begin, start_line, column);
  }

  void LexCharLiteral(size_t begin) {
    const int column = column_ - static_cast<int>(pos_ - begin);
    Advance();
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        throw LexError("unterminated character literal", line_);
      }
      char c = src_[pos_];
      Advance();
      if (c == '\\') {
        if (pos_ < src_.size() && src_[pos_] != '\n') Advance();
        continue;
      }
      if (c == '\'') break;
    }
    Emit(TokenKind::kCharLiteral, begin, line_, column);
  }

  void LexCharLiteral() { LexCharLiteral(pos_); }

  void LexSymbol() {
    const size_t begin = pos_;
    const int column = column_;
    for (const Symbol& symbol : SymbolsFor(file_.language)) {
      if (src_.substr(pos_, symbol.text.size()) == symbol.text) {
        pos_ += symbol.text.size();
        column_ += static_cast<int>(symbol.text.size());
        Emit(symbol.kind, begin, line_, column);
        return;
      }
    }
    // Stray characters (e.g. a lone backslash) become single-char operators.
    Advance();
    Emit(TokenKind::kOperator, begin, line_, column);
  }

  const SourceFile& file_;
  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  bool space_ = false;
  bool at_line_start_ = true;
  bool continuation_ = false;
  int depth_ = 0;
  std::vector<Token> tokens_;
  std::vector<bool> line_has_code_;
  std::vector<bool> line_has_comment_;
};

}  // namespace

std::string_view LanguageName(Language language) {
  switch (language) {
    case Language::kJava:
      return "java";
    case Language::kCpp:
      return "cpp";
    case Language::kPython:
      return "python";
  }
  return "unknown";
}

std::optional<Language> LanguageFromPath(std::string_view path) {
  std::string ext = Lower(std::filesystem::path(path).extension().string());
  if (ext == ".java") return Language::kJava;
  if (ext == ".cpp" || ext == ".cc" || ext == ".cxx" || ext == ".hpp" ||
      ext == ".h") {
    return Language::kCpp;
  }
  if (ext == ".py") return Language::kPython;
  return std::nullopt;
}

int CountLines(std::string_view content) {
  int lines =
      static_cast<int>(std::count(content.begin(), content.end(), '\n'));
  if (!content.empty() && content.back() != '\n') ++lines;
  return lines;
}

SourceFile SourceFile::FromText(std::string path, std::string content) {
  auto language = LanguageFromPath(path);
  if (!language) {
    throw ValidationError("unrecognized source extension: " + path);
  }
  SourceFile file;
  file.path = std::move(path);
  file.language = *language;
  file.content = std::move(content);
  file.line_count = CountLines(file.content);
  return file;
}

SourceFile SourceFile::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return FromText(path, buffer.str());
}

std::string SourceFile::Extension() const {
  std::string ext = Lower(std::filesystem::path(path).extension().string());
  if (!ext.empty() && ext.front() == '.') ext.erase(0, 1);
  return ext;
}

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword:
      return "keyword";
    case TokenKind::kIdentifier:
      return "identifier";
    case TokenKind::kNumericLiteral:
      return "numeric_literal";
    case TokenKind::kStringLiteral:
      return "string_literal";
    case TokenKind::kCharLiteral:
      return "char_literal";
    case TokenKind::kOperator:
      return "operator";
    case TokenKind::kPunctuation:
      return "punctuation";
  }
  return "unknown";
}

bool IsKeyword(Language language, std::string_view word) {
  switch (language) {
    case Language::kJava:
      return JavaKeywords().count(word) > 0;
    case Language::kCpp:
      return CppKeywords().count(word) > 0;
    case Language::kPython:
      return PythonKeywords().count(word) > 0;
  }
  return false;
}

LexResult Lex(const SourceFile& file) { return Lexer(file).Run(); }

}  // namespace mrpred::miner
