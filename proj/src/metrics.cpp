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

#include <set>
#include <string>
#include <unordered_set>

#include "mrpred/miner.hpp"
#include "token_scan.hpp"

namespace mrpred::miner {

using internal::At;
using internal::IsIdent;
using internal::kNone;
using internal::Tokens;

namespace {

bool IsDelimiterOnly(const Token& t) {
  if (t.kind != TokenKind::kPunctuation) return false;
  const std::string& s = t.text;
  return s == "{" || s == "}" || s == "(" || s == ")" || s == "[" || s == "]" ||
         s == ";" || s == ",";
}

bool IsArithmeticOperator(Language language, const Token& t) {
  if (t.kind != TokenKind::kOperator) return false;
  static const std::unordered_set<std::string_view> kCommon = {
      "+", "-", "*", "/", "%", "++", "--", "+=", "-=", "*=", "/=", "%="};
  static const std::unordered_set<std::string_view> kPythonExtra = {
      "**", "//", "**=", "//="};
  if (kCommon.count(t.text)) return true;
  return language == Language::kPython && kPythonExtra.count(t.text) > 0;
}

bool StartsLibraryStatement(Language language, const Tokens& t, std::size_t i) {
  const std::string& s = t[i].text;
  switch (language) {
    case Language::kJava:
      return s == "import" || s == "package";
    case Language::kCpp:
      return (s == "#" && At(t, i + 1, "include")) || s == "using";
    case Language::kPython:
      return s == "import" || s == "from";
  }
  return false;
}

std::string SimpleName(const std::string& name) {
  auto pos = name.rfind("::");
  return pos == std::string::npos ? name : name.substr(pos + 2);
}

// Declared local variables in a Java or C++ body, plus the identifier tokens
// that name types in those declarations (they are not operands).
class DeclarationScanner {
 public:
  DeclarationScanner(const Tokens& t, std::size_t begin, std::size_t end,
                     Language language)
      : t_(t),
        begin_(begin),
        end_(end),
        language_(language),
        java_(language == Language::kJava) {}

  void Run() {
    for (std::size_t i = begin_; i < end_; ++i) {
      if (t_[i].text == "new" || t_[i].text == "instanceof")
        MarkTypeAfter(i + 1);
      Context ctx;
      if (!IsStatementStart(i, ctx)) continue;
      TryDeclaration(i, ctx);
    }
  }

  int count() const { return count_; }
  const std::set<std::size_t>& type_tokens() const { return type_tokens_; }
  // Pointer and reference markers inside declarations.
  const std::set<std::size_t>& declarator_tokens() const {
    return declarator_tokens_;
  }

 private:
  enum class Context { kStatement, kForInit, kCatch, kResources };

  bool IsStatementStart(std::size_t i, Context& ctx) const {
    ctx = Context::kStatement;
    if (i == begin_) return true;
    const std::string& p = t_[i - 1].text;
    if (p == ";" || p == "{" || p == "}") {
      // A ';' inside for(...) or try(...) keeps the enclosing context.
      if (p == ";") {
        std::size_t open = EnclosingParen(i - 1);
        if (open != kNone && open > begin_ && At(t_, open - 1, "try")) {
          ctx = Context::kResources;
        } else if (open != kNone) {
          return false;
        }
      }
      return true;
    }
    if (p == ":") {
      return EnclosingParen(i - 1) == kNone;
    }
    if (p == "(" && i >= begin_ + 2) {
      const std::string& k = t_[i - 2].text;
      if (k == "for") {
        ctx = Context::kForInit;
        return true;
      }
      if (k == "catch") {
        ctx = Context::kCatch;
        return true;
      }
      if (k == "try") {
        ctx = Context::kResources;
        return true;
      }
    }
    return false;
  }

  // Index of the unclosed '(' enclosing position `i`, or kNone.
  std::size_t EnclosingParen(std::size_t i) const {
    int depth = 0;
    for (std::size_t k = i; k-- > begin_;) {
      const std::string& s = t_[k].text;
      if (s == ")") ++depth;
      if (s == "(") {
        if (depth == 0) return k;
        --depth;
      }
      if (s == "{" || s == "}") break;
    }
    return kNone;
  }

  bool IsModifier(const Token& tok) const {
    if (java_) return tok.text == "final";
    return tok.text == "const" || tok.text == "static" ||
           tok.text == "constexpr" || tok.text == "volatile" ||
           tok.text == "register" || tok.text == "thread_local";
  }

  // Parses a type starting at `k`; on success returns the index past it and
  // appends its identifier tokens to `types`.
  std::size_t ParseType(std::size_t k, std::vector<std::size_t>& types,
                        bool allow_union) const {
    if (k >= end_) return kNone;
    if (t_[k].kind == TokenKind::kKeyword &&
        internal::IsTypeKeyword(language_, t_[k].text) &&
        t_[k].text != "void") {
      while (k < end_ && t_[k].kind == TokenKind::kKeyword &&
             internal::IsTypeKeyword(language_, t_[k].text)) {
        ++k;
        if (java_) break;
      }
    } else if (IsIdent(t_, k) && !At(t_, k + 1, "(")) {
      types.push_back(k++);
      while (k + 1 < end_ && (At(t_, k, ".") || At(t_, k, "::")) &&
             IsIdent(t_, k + 1)) {
        types.push_back(k + 1);
        k += 2;
      }
      if (At(t_, k, "<")) {
        std::size_t after = internal::SkipAngles(t_, k, end_);
        if (after == kNone) return kNone;
        for (std::size_t x = k; x < after; ++x) {
          if (IsIdent(t_, x)) types.push_back(x);
        }
        k = after;
        while (k + 1 < end_ && (At(t_, k, ".") || At(t_, k, "::")) &&
               IsIdent(t_, k + 1)) {
          types.push_back(k + 1);
          k += 2;
        }
      }
    } else {
      return kNone;
    }
    if (java_) {
      while (At(t_, k, "[") && At(t_, k + 1, "]")) k += 2;
    } else {
      while (k < end_ && (At(t_, k, "*") || At(t_, k, "&") || At(t_, k, "&&") ||
                          At(t_, k, "const"))) {
        declarator_marks_.push_back(k);
        ++k;
      }
    }
    if (allow_union && At(t_, k, "|")) return ParseType(k + 1, types, true);
    return k;
  }

  bool ValidFollower(std::size_t k, Context ctx) const {
    if (k >= end_) return false;
    const std::string& s = t_[k].text;
    if (s == "=" || s == ";" || s == "," || s == "[") return true;
    if (s == ":") return ctx == Context::kForInit;
    if (s == ")") return ctx == Context::kCatch || ctx == Context::kResources;
    if (!java_ && (s == "(" || s == "{")) return ctx == Context::kStatement;
    return false;
  }

  void TryDeclaration(std::size_t i, Context ctx) {
    std::size_t k = i;
    while (k < end_) {
      if (IsModifier(t_[k])) {
        ++k;
      } else if (java_ && At(t_, k, "@") && IsIdent(t_, k + 1)) {
        k += 2;
        if (At(t_, k, "(")) {
          std::size_t close = internal::MatchForward(t_, k, end_);
          if (close == kNone) return;
          k = close + 1;
        }
      } else {
        break;
      }
    }
    std::vector<std::size_t> types;
    declarator_marks_.clear();
    k = ParseType(k, types, ctx == Context::kCatch);
    if (k == kNone || !IsIdent(t_, k) || !ValidFollower(k + 1, ctx)) return;
    ++count_;
    type_tokens_.insert(types.begin(), types.end());
    declarator_tokens_.insert(declarator_marks_.begin(),
                              declarator_marks_.end());
    if (ctx == Context::kCatch) return;
    // Further declarators: `int a = 1, b, c[] = {...};`
    int depth = 0;
    for (std::size_t x = k + 1; x < end_; ++x) {
      const std::string& s = t_[x].text;
      if (s == "new") {
        std::size_t after = SkipNewType(x + 1);
        if (after > x + 1) x = after - 1;
        continue;
      }
      if (s == "(" || s == "[" || s == "{") {
        ++depth;
      } else if (s == ")" || s == "]" || s == "}") {
        if (--depth < 0) return;
      } else if (depth == 0 &&
                 (s == ";" || (s == ":" && ctx == Context::kForInit))) {
        return;
      } else if (depth == 0 && s == ",") {
        std::size_t n = x + 1;
        while (!java_ && (At(t_, n, "*") || At(t_, n, "&"))) ++n;
        if (IsIdent(t_, n) && ValidFollower(n + 1, ctx)) {
          ++count_;
          for (std::size_t d = x + 1; d < n; ++d) declarator_tokens_.insert(d);
        }
      }
    }
  }

  std::size_t SkipNewType(std::size_t k) const {
    while (k < end_ && (IsIdent(t_, k) || At(t_, k, ".") || At(t_, k, "::"))) {
      ++k;
    }
    if (At(t_, k, "<")) {
      std::size_t after = internal::SkipAngles(t_, k, end_);
      if (after != kNone) k = after;
    }
    return k;
  }

  void MarkTypeAfter(std::size_t k) {
    std::size_t end = SkipNewType(k);
    for (std::size_t x = k; x < end; ++x) {
      if (IsIdent(t_, x) && !At(t_, x + 1, "(")) type_tokens_.insert(x);
    }
  }

  const Tokens& t_;
  std::size_t begin_;
  std::size_t end_;
  Language language_;
  bool java_;
  int count_ = 0;
  std::set<std::size_t> type_tokens_;
  std::set<std::size_t> declarator_tokens_;
  mutable std::vector<std::size_t> declarator_marks_;
};

// Distinct names bound in a Python body: assignment targets, loop targets
// and `as` bindings. Parameters are excluded.
int CountPythonLocals(const Tokens& t, std::size_t begin, std::size_t end,
                      const std::set<std::string>& params) {
  std::set<std::string> names;
  auto add = [&](const Token& tok) {
    if (!params.count(tok.text)) names.insert(tok.text);
  };
  for (std::size_t i = begin; i < end; ++i) {
    const Token& tok = t[i];
    if (tok.text == "as" && IsIdent(t, i + 1)) {
      add(t[i + 1]);
      continue;
    }
    const bool stmt_start = tok.logical_line_start ||
                            (i > begin && At(t, i - 1, ";")) || i == begin;
    if (!stmt_start) continue;
    std::size_t k = i;
    if (At(t, k, "async")) ++k;
    if (At(t, k, "for")) {
      std::vector<std::size_t> targets;
      ++k;
      while (k < end && !At(t, k, "in")) {
        if (IsIdent(t, k)) targets.push_back(k);
        ++k;
      }
      for (std::size_t x : targets) add(t[x]);
      continue;
    }
    // name (, name)* =   |   name : annotation [= value]
    std::vector<std::size_t> targets;
    k = i;
    while (IsIdent(t, k)) {
      targets.push_back(k);
      if (At(t, k + 1, ",")) {
        k += 2;
      } else {
        ++k;
        break;
      }
    }
    if (targets.empty()) continue;
    if (At(t, k, "=") || (targets.size() == 1 && At(t, k, ":"))) {
      for (std::size_t x : targets) add(t[x]);
    }
  }
  return static_cast<int>(names.size());
}

struct ParameterSummary {
  std::string full;
  int count = 0;
  std::string types;
  std::set<std::string> names;
};

std::string JavaParameterType(const Tokens& t, std::size_t b, std::size_t e,
                              std::string* name) {
  while (b < e) {
    if (At(t, b, "final")) {
      ++b;
    } else if (At(t, b, "@") && IsIdent(t, b + 1)) {
      b += 2;
      while (At(t, b, ".") && IsIdent(t, b + 1)) b += 2;
      if (At(t, b, "(")) {
        std::size_t close = internal::MatchForward(t, b, e);
        b = close == kNone ? e : close + 1;
      }
    } else {
      break;
    }
  }
  std::size_t dims = 0;
  std::size_t last = e;
  while (last >= b + 2 && At(t, last - 1, "]") && At(t, last - 2, "[")) {
    last -= 2;
    ++dims;
  }
  if (last > b + 1 && t[last - 1].IsWord()) {
    *name = t[last - 1].text;
    std::string type = JoinTypeTokens(t, b, last - 1);
    for (std::size_t d = 0; d < dims; ++d) type += "[]";
    return type;
  }
  return JoinTypeTokens(t, b, e);
}

std::string CppParameterType(const Tokens& t, std::size_t b, std::size_t e,
                             std::string* name) {
  // Drop a default argument.
  int depth = 0;
  for (std::size_t i = b; i < e; ++i) {
    const std::string& s = t[i].text;
    if (s == "(" || s == "[" || s == "{" || s == "<") ++depth;
    if (s == ")" || s == "]" || s == "}" || s == ">") --depth;
    if (s == "=" && depth == 0) {
      e = i;
      break;
    }
  }
  std::size_t last = e;
  std::string dims;
  while (last > b && At(t, last - 1, "]")) {
    std::size_t open = last - 1;
    while (open > b && !At(t, open, "[")) --open;
    dims = JoinTypeTokens(t, open, last) + dims;
    last = open;
  }
  if (last > b + 1 && IsIdent(t, last - 1) && !At(t, last - 2, "::") &&
      !At(t, last - 2, ".")) {
    *name = t[last - 1].text;
    return JoinTypeTokens(t, b, last - 1) + dims;
  }
  return JoinTypeTokens(t, b, e);
}

std::string PythonParameterType(const Tokens& t, std::size_t b, std::size_t e,
                                std::string* name) {
  while (b < e && (At(t, b, "*") || At(t, b, "**"))) ++b;
  if (b < e && IsIdent(t, b)) *name = t[b].text;
  if (b + 1 < e && At(t, b + 1, ":")) {
    std::size_t a = b + 2;
    std::size_t stop = a;
    int depth = 0;
    while (stop < e) {
      const std::string& s = t[stop].text;
      if (s == "(" || s == "[" || s == "{") ++depth;
      if (s == ")" || s == "]" || s == "}") --depth;
      if (s == "=" && depth == 0) break;
      ++stop;
    }
    if (stop > a) return JoinTypeTokens(t, a, stop);
  }
  return "unknown";
}

ParameterSummary SummarizeParameters(const MethodRecord& m) {
  ParameterSummary summary;
  const Tokens& t = m.tokens;
  summary.full = JoinSourceTokens(t, m.params_begin, m.params_end);
  const bool angles = m.language != Language::kPython;
  auto parts = internal::SplitTopLevel(t, m.params_begin, m.params_end, angles);
  summary.count = static_cast<int>(parts.size());
  std::string joined;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    auto [b, e] = parts[p];
    std::string name;
    std::string type;
    switch (m.language) {
      case Language::kJava:
        type = JavaParameterType(t, b, e, &name);
        break;
      case Language::kCpp:
        type = CppParameterType(t, b, e, &name);
        break;
      case Language::kPython:
        type = PythonParameterType(t, b, e, &name);
        break;
    }
    if (p > 0) joined.push_back(',');
    joined += type;
    if (!name.empty()) summary.names.insert(name);
  }
  summary.types = joined;
  return summary;
}

}  // namespace

bool IsDecisionToken(Language language, const Token& token) {
  const std::string& s = token.text;
  if (language == Language::kPython) {
    if (token.kind != TokenKind::kKeyword) return false;
    return s == "if" || s == "elif" || s == "for" || s == "while" ||
           s == "except" || s == "and" || s == "or";
  }
  if (token.kind == TokenKind::kKeyword) {
    return s == "if" || s == "for" || s == "while" || s == "do" ||
           s == "case" || s == "catch";
  }
  if (token.kind == TokenKind::kOperator) {
    return s == "?" || s == "&&" || s == "||";
  }
  return false;
}

int ComputeCcn(const MethodRecord& method) {
  const Tokens& t = method.tokens;
  int decisions = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!IsDecisionToken(method.language, t[i])) continue;
    if (method.language == Language::kJava && t[i].text == "?") {
      // Generic wildcards (List<?>, <? extends T>) are not conditionals.
      if (At(t, i + 1, ">") || At(t, i + 1, ">>") || At(t, i + 1, ">>>") ||
          At(t, i + 1, ",") || At(t, i + 1, "extends") ||
          At(t, i + 1, "super")) {
        continue;
      }
    }
    ++decisions;
  }
  return 1 + decisions;
}

MetricVector ComputeMetrics(const MethodRecord& method, const SourceFile& file,
                            const LexResult& lexed) {
  MetricVector m;
  const Tokens& t = method.tokens;
  const Language lang = method.language;

  m.start_line = method.start_line;
  m.end_line = method.end_line;
  m.tloc = method.end_line - method.start_line + 1;

  int blank = 0;
  int comment_only = 0;
  for (int line = method.start_line; line <= method.end_line; ++line) {
    if (line < 1 || static_cast<std::size_t>(line) > lexed.lines.size())
      continue;
    switch (lexed.lines[static_cast<std::size_t>(line) - 1]) {
      case LineKind::kBlank:
        ++blank;
        break;
      case LineKind::kCommentOnly:
        ++comment_only;
        break;
      case LineKind::kCode:
        break;
    }
  }
  std::set<int> library_lines;
  std::set<int> statement_lines;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const bool first_on_line = i == 0 || t[i - 1].end_line != t[i].line;
    if (first_on_line && StartsLibraryStatement(lang, t, i)) {
      library_lines.insert(t[i].line);
    }
    if (!IsDelimiterOnly(t[i])) statement_lines.insert(t[i].line);
  }
  const int library = static_cast<int>(library_lines.size());
  m.sloc_whbl = m.tloc - blank;
  m.nloc = m.tloc - comment_only - library;
  m.nloc_whbl = m.nloc - blank;
  m.sloc_statements = static_cast<int>(statement_lines.size());
  m.token_count = static_cast<int>(t.size());

  ParameterSummary params = SummarizeParameters(method);
  m.full_parameters = params.full;
  m.num_arg = params.count;
  m.data_arg = params.types;

  const std::size_t body_begin = method.body_begin;
  const std::size_t body_end = method.body_end;
  std::set<std::size_t> type_tokens;
  std::set<std::size_t> declarator_tokens;
  if (lang == Language::kPython) {
    m.total_var = CountPythonLocals(t, body_begin, body_end, params.names);
  } else {
    DeclarationScanner scanner(t, body_begin, body_end, lang);
    scanner.Run();
    m.total_var = scanner.count();
    type_tokens = scanner.type_tokens();
    declarator_tokens = scanner.declarator_tokens();
  }

  const std::string own_name = SimpleName(method.name);
  for (std::size_t i = body_begin; i < body_end; ++i) {
    const Token& tok = t[i];
    if (IsArithmeticOperator(lang, tok) && !declarator_tokens.count(i)) {
      ++m.num_oper;
    }
    if (tok.text == "new" && tok.kind == TokenKind::kKeyword) {
      // `new Foo<>(...)`: the `(` follows the type arguments, not the name.
      std::size_t k = i + 1;
      while (IsIdent(t, k) || At(t, k, ".") || At(t, k, "::")) ++k;
      if (k > i + 1 && At(t, k, "<")) {
        std::size_t after = internal::SkipAngles(t, k, body_end);
        if (after != kNone && At(t, after, "(")) ++m.num_meth_call;
      }
    }
    switch (tok.kind) {
      case TokenKind::kNumericLiteral:
      case TokenKind::kStringLiteral:
      case TokenKind::kCharLiteral:
        ++m.num_operands;
        break;
      case TokenKind::kIdentifier: {
        const bool call = At(t, i + 1, "(");
        const bool annotation = i > 0 && At(t, i - 1, "@");
        if (!call && !annotation && !type_tokens.count(i)) ++m.num_operands;
        if (call && !annotation && tok.text != own_name) {
          const Token* prev = i > 0 ? &t[i - 1] : nullptr;
          const bool declaration =
              prev != nullptr &&
              (prev->kind == TokenKind::kIdentifier ||
               (prev->kind == TokenKind::kKeyword &&
                (internal::IsTypeKeyword(lang, prev->text) ||
                 prev->text == "def" || prev->text == "class")));
          if (!declaration) ++m.num_meth_call;
        }
        break;
      }
      default:
        break;
    }
  }

  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].kind != TokenKind::kKeyword) continue;
    if (t[i].text == "for" || t[i].text == "while") ++m.num_loops;
    if (t[i].text == "return") ++m.total_return;
  }
  m.ccn = ComputeCcn(method);

  if (lang == Language::kPython) {
    m.return_data_type =
        method.return_type.empty() ? "unknown" : method.return_type;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].text == "return" && t[i].kind == TokenKind::kKeyword &&
          i + 1 < t.size() && !t[i + 1].logical_line_start &&
          !At(t, i + 1, ";")) {
        m.has_return = 1;
        break;
      }
    }
  } else {
    m.return_data_type = method.return_type;
    m.has_return = method.return_type != "void" ? 1 : 0;
  }
  m.ext = file.Extension();
  return m;
}

MetricVector ComputeMetrics(const MethodRecord& method,
                            const SourceFile& file) {
  return ComputeMetrics(method, file, Lex(file));
}

std::ostream& operator<<(std::ostream& os, const MetricVector& m) {
  return os << "{tloc=" << m.tloc << " sloc_whbl=" << m.sloc_whbl
            << " nloc=" << m.nloc << " nloc_whbl=" << m.nloc_whbl
            << " sloc_statements=" << m.sloc_statements
            << " token_count=" << m.token_count
            << " start_line=" << m.start_line << " end_line=" << m.end_line
            << " full_parameters='" << m.full_parameters
            << "' numArg=" << m.num_arg << " dataArg='" << m.data_arg
            << "' numOper=" << m.num_oper << " numOperands=" << m.num_operands
            << " total_Var=" << m.total_var << " numLoops=" << m.num_loops
            << " CCN=" << m.ccn << " numMethCall=" << m.num_meth_call
            << " has_return=" << m.has_return
            << " totalReturn=" << m.total_return << " returnDataType='"
            << m.return_data_type << "' ext='" << m.ext << "'}";
}

}  // namespace mrpred::miner
