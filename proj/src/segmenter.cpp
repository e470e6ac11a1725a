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

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "mrpred/errors.hpp"
#include "mrpred/miner.hpp"
#include "token_scan.hpp"

namespace mrpred::miner {

using internal::At;
using internal::IsIdent;
using internal::kNone;
using internal::MatchForward;
using internal::Tokens;

namespace {

std::string LineOf(const Token& t) { return std::to_string(t.line); }

// Located pieces of one brace-bodied function definition.
struct FunctionMatch {
  std::size_t decl_start;
  std::size_t qualified_name_start;
  std::size_t name_end;  // one past the last name token
  std::size_t open_paren;
  std::size_t close_paren;
  std::size_t trailing_begin = kNone;  // C++ trailing return type
  std::size_t trailing_end = kNone;
  std::size_t body_open;
  std::size_t body_close;
};

class BracedSegmenter {
 public:
  BracedSegmenter(const SourceFile& file, const Tokens& tokens)
      : file_(file), t_(tokens), java_(file.language == Language::kJava) {
    skip_.assign(t_.size(), false);
    if (!java_) MarkDirectives();
  }

  std::vector<MethodRecord> Run() {
    std::vector<MethodRecord> records;
    int depth = 0;
    std::size_t i = 0;
    while (i < t_.size()) {
      if (skip_[i]) {
        ++i;
        continue;
      }
      const Token& tok = t_[i];
      if (tok.kind == TokenKind::kPunctuation && tok.text == "{") {
        ++depth;
      } else if (tok.kind == TokenKind::kPunctuation && tok.text == "}") {
        if (depth == 0) {
          throw UnbalancedDelimiters("unmatched '}' at line " + LineOf(tok));
        }
        --depth;
      } else if (IsIdent(t_, i) || (!java_ && tok.text == "operator")) {
        if (auto match = TryFunction(i)) {
          records.push_back(MakeRecord(*match));
          i = match->body_close + 1;
          continue;
        }
      }
      ++i;
    }
    if (depth != 0) {
      throw UnbalancedDelimiters("brace depth " + std::to_string(depth) +
                                 " at end of " + file_.path);
    }
    return records;
  }

 private:
  // Preprocessor directives are invisible to segmentation.
  void MarkDirectives() {
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (t_[i].text != "#" || !t_[i].logical_line_start) continue;
      skip_[i] = true;
      for (std::size_t j = i + 1; j < t_.size() && !t_[j].logical_line_start;
           ++j) {
        skip_[j] = true;
      }
    }
  }

  // Returns the index of the '(' that follows a function name at `i`, or
  // kNone. Handles C++ operator names.
  std::size_t ParenAfterName(std::size_t i, std::size_t& name_end) const {
    if (t_[i].text == "operator") {
      std::size_t j = i + 1;
      if (At(t_, j, "(") && At(t_, j + 1, ")")) {
        j += 2;
      } else if (At(t_, j, "[") && At(t_, j + 1, "]")) {
        j += 2;
      } else {
        while (j < t_.size() && j < i + 4 && !At(t_, j, "(")) ++j;
      }
      name_end = j;
      return At(t_, j, "(") ? j : kNone;
    }
    name_end = i + 1;
    return At(t_, i + 1, "(") ? i + 1 : kNone;
  }

  bool AcceptablePredecessor(std::size_t q) const {
    if (q == 0) return true;
    const Token& p = t_[q - 1];
    if (p.kind == TokenKind::kIdentifier) return !(java_ && p.text == "record");
    if (p.kind == TokenKind::kKeyword) {
      if (internal::IsTypeKeyword(file_.language, p.text)) return true;
      return java_ ? internal::IsJavaModifier(p.text)
                   : internal::IsCppSpecifier(p.text);
    }
    const std::string& s = p.text;
    if (s == "{" || s == "}" || s == ";" || s == ">" || s == ">>" || s == "]") {
      return true;
    }
    if (java_) {
      if (s == ">>>") return true;
      if (s == ")") return ClosesAnnotation(q - 1);
      return false;
    }
    if (s == "*" || s == "&" || s == "&&") return true;
    if (s == ":" && q >= 2) {
      const std::string& a = t_[q - 2].text;
      return a == "public" || a == "private" || a == "protected";
    }
    return false;
  }

  // True when the ')' at `close` ends an annotation's argument list.
  bool ClosesAnnotation(std::size_t close) const {
    int depth = 0;
    for (std::size_t k = close + 1; k-- > 0;) {
      if (t_[k].text == ")") ++depth;
      if (t_[k].text == "(" && --depth == 0) {
        std::size_t n = k;
        while (n >= 2 && IsIdent(t_, n - 1) && At(t_, n - 2, ".")) n -= 2;
        return n >= 2 && IsIdent(t_, n - 1) && At(t_, n - 2, "@");
      }
    }
    return false;
  }

  bool IsAnnotationName(std::size_t k) const {
    std::size_t n = k;
    while (n >= 2 && At(t_, n - 1, ".") && IsIdent(t_, n - 2)) n -= 2;
    return n >= 1 && At(t_, n - 1, "@");
  }

  std::optional<FunctionMatch> TryFunction(std::size_t i) const {
    FunctionMatch m;
    std::size_t name_end = 0;
    m.open_paren = ParenAfterName(i, name_end);
    if (m.open_paren == kNone) return std::nullopt;
    m.name_end = name_end;
    if (IsAnnotationName(i)) return std::nullopt;

    std::size_t q = i;
    if (!java_) {
      while (true) {
        if (q >= 1 && At(t_, q - 1, "~")) {
          --q;
        } else if (q >= 2 && At(t_, q - 1, "::") && IsIdent(t_, q - 2)) {
          q -= 2;
        } else if (q >= 2 && At(t_, q - 1, "::") && At(t_, q - 2, ">")) {
          // Foo<T>::bar
          std::size_t k = q - 2;
          int depth = 0;
          while (true) {
            if (t_[k].text == ">") ++depth;
            if (t_[k].text == "<" && --depth == 0) break;
            if (k == 0) return std::nullopt;
            --k;
          }
          if (k == 0 || !IsIdent(t_, k - 1)) return std::nullopt;
          q = k - 1;
        } else {
          break;
        }
      }
    }
    m.qualified_name_start = q;
    if (!AcceptablePredecessor(q)) return std::nullopt;

    m.close_paren = MatchForward(t_, m.open_paren);
    if (m.close_paren == kNone) {
      throw UnbalancedDelimiters("unclosed '(' at line " +
                                 LineOf(t_[m.open_paren]));
    }
    std::size_t j = m.close_paren + 1;
    if (java_) {
      if (!SkipJavaTrailer(j)) return std::nullopt;
    } else {
      if (!SkipCppTrailer(j, m)) return std::nullopt;
    }
    if (!At(t_, j, "{")) return std::nullopt;
    m.body_open = j;
    m.body_close = MatchForward(t_, j);
    if (m.body_close == kNone) {
      throw UnbalancedDelimiters("unclosed body of '" + t_[i].text +
                                 "' starting at line " + LineOf(t_[j]));
    }
    m.decl_start = DeclarationStart(q);
    return m;
  }

  bool SkipJavaTrailer(std::size_t& j) const {
    while (At(t_, j, "[") && At(t_, j + 1, "]")) j += 2;
    if (!At(t_, j, "throws")) return true;
    ++j;
    while (j < t_.size()) {
      const Token& tok = t_[j];
      if (tok.text == "{" || tok.text == ";") return true;
      if (tok.kind == TokenKind::kIdentifier || tok.text == "." ||
          tok.text == ",") {
        ++j;
      } else if (tok.text == "<") {
        j = internal::SkipAngles(t_, j, t_.size());
        if (j == kNone) return false;
      } else {
        return false;
      }
    }
    return false;
  }

  bool SkipCppTrailer(std::size_t& j, FunctionMatch& m) const {
    while (j < t_.size()) {
      const std::string& s = t_[j].text;
      if (s == "const" || s == "volatile" || s == "override" || s == "final" ||
          s == "mutable" || s == "&" || s == "&&") {
        ++j;
      } else if (s == "noexcept" || s == "throw") {
        ++j;
        if (At(t_, j, "(")) {
          std::size_t close = MatchForward(t_, j);
          if (close == kNone) return false;
          j = close + 1;
        }
      } else if (s == "[" && At(t_, j + 1, "[")) {
        std::size_t close = MatchForward(t_, j);
        if (close == kNone) return false;
        j = close + 1;
      } else if (s == "->") {
        m.trailing_begin = ++j;
        int depth = 0;
        while (j < t_.size()) {
          const std::string& u = t_[j].text;
          if (depth == 0 && (u == "{" || u == ";" || u == "=")) break;
          if (u == "<" || u == "(") ++depth;
          if (u == ">" || u == ")") --depth;
          if (u == ">>") depth -= 2;
          ++j;
        }
        m.trailing_end = j;
      } else {
        break;
      }
    }
    if (At(t_, j, ":")) {
      // Constructor initializer list.
      ++j;
      while (j < t_.size()) {
        while (IsIdent(t_, j) || At(t_, j, "::")) ++j;
        if (At(t_, j, "<")) {
          j = internal::SkipAngles(t_, j, t_.size());
          if (j == kNone) return false;
        }
        if (!At(t_, j, "(") && !At(t_, j, "{")) return false;
        std::size_t close = MatchForward(t_, j);
        if (close == kNone) return false;
        j = close + 1;
        if (At(t_, j, ",")) {
          ++j;
          continue;
        }
        break;
      }
    }
    return true;
  }

  std::size_t DeclarationStart(std::size_t q) const {
    std::size_t k = q;
    int angle = 0;
    while (k > 0) {
      const Token& tok = t_[k - 1];
      const std::string& s = tok.text;
      if (skip_[k - 1]) break;
      if (tok.kind == TokenKind::kIdentifier) {
        if (java_ && IsAnnotationName(k - 1)) break;
      } else if (tok.kind == TokenKind::kKeyword) {
        if (s == "return" || s == "new" || s == "throw" || s == "else" ||
            s == "case" || s == "goto" || s == "operator") {
          break;
        }
      } else if (s == ">" || s == ">>" || s == ">>>") {
        angle += static_cast<int>(s.size());
      } else if (s == "<") {
        if (angle == 0) break;
        --angle;
      } else if (s == ",") {
        if (angle <= 0) break;
      } else if (s == "." || s == "::" || s == "?" || s == "*" || s == "&" ||
                 s == "&&" || s == "~" || s == "...") {
      } else if (s == "[" || s == "]") {
        if (!java_ && s == "]" && k >= 2 && At(t_, k - 2, "]")) break;
      } else {
        break;
      }
      --k;
    }
    return k;
  }

  std::string ReturnType(const FunctionMatch& m) const {
    std::size_t k = m.decl_start;
    const std::size_t end = m.qualified_name_start;
    while (k < end) {
      const Token& tok = t_[k];
      if (tok.kind == TokenKind::kKeyword &&
          (java_ ? internal::IsJavaModifier(tok.text)
                 : internal::IsCppSpecifier(tok.text))) {
        ++k;
      } else if (tok.text == "template" && At(t_, k + 1, "<")) {
        std::size_t after = internal::SkipAngles(t_, k + 1, end);
        if (after == kNone) break;
        k = after;
      } else if (java_ && tok.text == "<") {
        std::size_t after = internal::SkipAngles(t_, k, end);
        if (after == kNone) break;
        k = after;
      } else {
        break;
      }
    }
    std::string type = JoinTypeTokens(t_, k, end);
    if (!java_ && type == "auto" && m.trailing_begin != kNone) {
      type = JoinTypeTokens(t_, m.trailing_begin, m.trailing_end);
    }
    return type.empty() ? "void" : type;
  }

  MethodRecord MakeRecord(const FunctionMatch& m) const {
    MethodRecord r;
    r.language = file_.language;
    r.name = JoinTypeTokens(t_, m.qualified_name_start, m.name_end);
    r.signature = JoinSourceTokens(t_, m.decl_start, m.body_open);
    r.start_line = t_[m.decl_start].line;
    r.end_line = t_[m.body_close].end_line;
    r.tokens.assign(t_.begin() + static_cast<std::ptrdiff_t>(m.decl_start),
                    t_.begin() + static_cast<std::ptrdiff_t>(m.body_close) + 1);
    r.params_begin = m.open_paren + 1 - m.decl_start;
    r.params_end = m.close_paren - m.decl_start;
    r.body_begin = m.body_open + 1 - m.decl_start;
    r.body_end = m.body_close - m.decl_start;
    r.return_type = ReturnType(m);
    return r;
  }

  const SourceFile& file_;
  const Tokens& t_;
  bool java_;
  std::vector<bool> skip_;
};

void CheckPythonBrackets(const Tokens& t) {
  std::vector<const Token*> open;
  for (const Token& tok : t) {
    if (tok.kind != TokenKind::kPunctuation) continue;
    if (tok.text == "(" || tok.text == "[" || tok.text == "{") {
      open.push_back(&tok);
    } else if (tok.text == ")" || tok.text == "]" || tok.text == "}") {
      if (open.empty()) {
        throw UnbalancedDelimiters("unmatched '" + tok.text + "' at line " +
                                   LineOf(tok));
      }
      open.pop_back();
    }
  }
  if (!open.empty()) {
    throw UnbalancedDelimiters("unclosed '" + open.back()->text + "' at line " +
                               LineOf(*open.back()));
  }
}

std::vector<MethodRecord> SegmentPython(const SourceFile& file,
                                        const Tokens& t) {
  CheckPythonBrackets(t);
  std::vector<MethodRecord> records;
  std::size_t i = 0;
  while (i < t.size()) {
    const Token& first = t[i];
    const bool is_def =
        first.logical_line_start &&
        (first.text == "def" || (first.text == "async" && At(t, i + 1, "def")));
    if (!is_def) {
      ++i;
      continue;
    }
    const std::size_t def = first.text == "def" ? i : i + 1;
    const std::size_t name = def + 1;
    if (!IsIdent(t, name) || !At(t, name + 1, "(")) {
      ++i;
      continue;
    }
    const std::size_t open = name + 1;
    const std::size_t close = MatchForward(t, open);
    std::size_t j = close + 1;
    std::size_t ret_begin = kNone;
    std::size_t ret_end = kNone;
    if (At(t, j, "->")) {
      ret_begin = ++j;
      int depth = 0;
      while (j < t.size() && !(depth == 0 && t[j].text == ":")) {
        const std::string& s = t[j].text;
        if (s == "(" || s == "[" || s == "{") ++depth;
        if (s == ")" || s == "]" || s == "}") --depth;
        ++j;
      }
      ret_end = j;
    }
    if (!At(t, j, ":")) {
      throw UnbalancedDelimiters("missing ':' after def at line " +
                                 LineOf(t[def]));
    }
    const std::size_t body_begin = j + 1;
    std::size_t k = body_begin;
    while (k < t.size() &&
           !(t[k].logical_line_start && t[k].column <= first.column)) {
      ++k;
    }
    MethodRecord r;
    r.language = file.language;
    r.name = t[name].text;
    r.signature = JoinSourceTokens(t, i, body_begin);
    r.start_line = first.line;
    r.end_line = first.line;
    for (std::size_t x = i; x < k; ++x) {
      r.end_line = std::max(r.end_line, t[x].end_line);
    }
    r.tokens.assign(t.begin() + static_cast<std::ptrdiff_t>(i),
                    t.begin() + static_cast<std::ptrdiff_t>(k));
    r.params_begin = open + 1 - i;
    r.params_end = close - i;
    r.body_begin = body_begin - i;
    r.body_end = k - i;
    if (ret_begin != kNone)
      r.return_type = JoinTypeTokens(t, ret_begin, ret_end);
    records.push_back(std::move(r));
    i = k;
  }
  return records;
}

}  // namespace

std::string JoinTypeTokens(const std::vector<Token>& tokens, std::size_t begin,
                           std::size_t end) {
  std::string out;
  auto wordish = [](const Token& t) {
    return t.IsWord() || t.kind == TokenKind::kNumericLiteral || t.text == "?";
  };
  for (std::size_t i = begin; i < end && i < tokens.size(); ++i) {
    if (i > begin && wordish(tokens[i - 1]) && wordish(tokens[i])) {
      out.push_back(' ');
    }
    out += tokens[i].text;
  }
  return out;
}

std::string JoinSourceTokens(const std::vector<Token>& tokens,
                             std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end && i < tokens.size(); ++i) {
    if (i > begin && tokens[i].space_before) out.push_back(' ');
    out += tokens[i].text;
  }
  return out;
}

std::vector<MethodRecord> SegmentMethods(const SourceFile& file,
                                         const LexResult& lexed) {
  std::vector<MethodRecord> records =
      file.language == Language::kPython
          ? SegmentPython(file, lexed.tokens)
          : BracedSegmenter(file, lexed.tokens).Run();
  std::set<std::string> seen;
  for (MethodRecord& r : records) {
    std::string id =
        file.path + "::" + r.name + "#" + std::to_string(r.start_line);
    std::string unique = id;
    for (int n = 2; !seen.insert(unique).second; ++n) {
      unique = id + "~" + std::to_string(n);
    }
    r.method_id = std::move(unique);
  }
  return records;
}

std::vector<MethodRecord> SegmentMethods(const SourceFile& file) {
  return SegmentMethods(file, Lex(file));
}

}  // namespace mrpred::miner
