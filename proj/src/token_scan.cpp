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

#include "token_scan.hpp"

#include <unordered_set>

namespace mrpred::miner::internal {

std::size_t MatchForward(const Tokens& t, std::size_t open, std::size_t limit) {
  if (limit == kNone || limit > t.size()) limit = t.size();
  int depth = 0;
  for (std::size_t i = open; i < limit; ++i) {
    const std::string& s = t[i].text;
    if (t[i].kind != TokenKind::kPunctuation) continue;
    if (s == "(" || s == "[" || s == "{") {
      ++depth;
    } else if (s == ")" || s == "]" || s == "}") {
      if (--depth == 0) return i;
      if (depth < 0) return kNone;
    }
  }
  return kNone;
}

std::size_t SkipAngles(const Tokens& t, std::size_t open, std::size_t limit) {
  if (limit > t.size()) limit = t.size();
  int depth = 0;
  for (std::size_t i = open; i < limit; ++i) {
    const Token& tok = t[i];
    const std::string& s = tok.text;
    if (s == "<") {
      ++depth;
    } else if (s == ">" || s == ">>" || s == ">>>") {
      depth -= static_cast<int>(s.size());
      if (depth <= 0) return depth == 0 ? i + 1 : kNone;
    } else if (tok.IsWord() || tok.kind == TokenKind::kNumericLiteral ||
               s == "," || s == "?" || s == "." || s == "::" || s == "[" ||
               s == "]" || s == "*" || s == "&" || s == "&&" || s == "...") {
      continue;
    } else {
      return kNone;
    }
  }
  return kNone;
}

std::vector<std::pair<std::size_t, std::size_t>> SplitTopLevel(
    const Tokens& t, std::size_t begin, std::size_t end, bool angles) {
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  if (begin >= end) return parts;
  int depth = 0;
  int angle = 0;
  std::size_t start = begin;
  for (std::size_t i = begin; i < end; ++i) {
    const std::string& s = t[i].text;
    if (s == "(" || s == "[" || s == "{") {
      ++depth;
    } else if (s == ")" || s == "]" || s == "}") {
      --depth;
    } else if (angles && s == "<") {
      ++angle;
    } else if (angles && (s == ">" || s == ">>" || s == ">>>")) {
      angle -= static_cast<int>(s.size());
      if (angle < 0) angle = 0;
    } else if (s == "," && depth == 0 && angle == 0) {
      parts.emplace_back(start, i);
      start = i + 1;
    }
  }
  parts.emplace_back(start, end);
  return parts;
}

bool IsTypeKeyword(Language language, std::string_view word) {
  static const std::unordered_set<std::string_view> kJava = {
      "void", "boolean", "byte",  "char",  "short",
      "int",  "long",    "float", "double"};
  static const std::unordered_set<std::string_view> kCpp = {
      "void",     "bool",     "char",  "char8_t", "char16_t", "char32_t",
      "wchar_t",  "short",    "int",   "long",    "float",    "double",
      "signed",   "unsigned", "auto",  "const",   "volatile", "struct",
      "typename", "enum",     "class", "union"};
  switch (language) {
    case Language::kJava:
      return kJava.count(word) > 0;
    case Language::kCpp:
      return kCpp.count(word) > 0;
    case Language::kPython:
      return false;
  }
  return false;
}

bool IsJavaModifier(std::string_view word) {
  static const std::unordered_set<std::string_view> kWords = {
      "public",   "private",  "protected",    "static",
      "final",    "abstract", "synchronized", "native",
      "strictfp", "default",  "transient",    "volatile"};
  return kWords.count(word) > 0;
}

bool IsCppSpecifier(std::string_view word) {
  static const std::unordered_set<std::string_view> kWords = {
      "static",    "inline",       "virtual",   "explicit",
      "friend",    "extern",       "constexpr", "consteval",
      "constinit", "thread_local", "register",  "mutable"};
  return kWords.count(word) > 0;
}

}  // namespace mrpred::miner::internal
