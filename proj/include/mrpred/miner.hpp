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

// Method segmentation and the 21 method-level source-code metrics.
//
// Java is the fully supported language. C++ and Python go through the same
// interface at tokenizer fidelity (no preprocessing, no type resolution), so
// their signature-derived fields are best effort.

#ifndef MRPRED_MINER_HPP_
#define MRPRED_MINER_HPP_

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mrpred/lexer.hpp"

namespace mrpred::miner {

struct MethodRecord {
  std::string method_id;  // <path>::<name>#<start_line>
  std::string name;
  std::string signature;
  int start_line = 0;
  int end_line = 0;
  std::vector<Token> tokens;
  Language language = Language::kJava;

  // Offsets into `tokens`. The parameter list is [params_begin, params_end)
  // (parentheses excluded); the body is [body_begin, body_end) (outer braces
  // or the Python header colon excluded).
  std::size_t params_begin = 0;
  std::size_t params_end = 0;
  std::size_t body_begin = 0;
  std::size_t body_end = 0;
  // Normalized declared return type; "void" for constructors and
  // destructors; empty for Python functions without an annotation.
  std::string return_type;
};

// Throws LexError or UnbalancedDelimiters.
std::vector<MethodRecord> SegmentMethods(const SourceFile& file);
std::vector<MethodRecord> SegmentMethods(const SourceFile& file,
                                         const LexResult& lexed);

struct MetricVector {
  int tloc = 0;
  int sloc_whbl = 0;
  int nloc = 0;
  int nloc_whbl = 0;
  int sloc_statements = 0;
  int token_count = 0;
  int start_line = 0;
  int end_line = 0;
  std::string full_parameters;
  int num_arg = 0;
  std::string data_arg;
  int num_oper = 0;
  int num_operands = 0;
  int total_var = 0;
  int num_loops = 0;
  int ccn = 1;
  int num_meth_call = 0;
  int has_return = 0;
  int total_return = 0;
  std::string return_data_type;
  std::string ext;

  bool operator==(const MetricVector&) const = default;
};

std::ostream& operator<<(std::ostream& os, const MetricVector& m);

MetricVector ComputeMetrics(const MethodRecord& method, const SourceFile& file);
MetricVector ComputeMetrics(const MethodRecord& method, const SourceFile& file,
                            const LexResult& lexed);

// 1 + number of decision-point tokens.
int ComputeCcn(const MethodRecord& method);

// True for tokens that add a decision point in `language`.
bool IsDecisionToken(Language language, const Token& token);

// Joins tokens into normalized text: one space between adjacent word-like
// tokens, nothing elsewhere. Used for type names ("int[]", "Map<K,V>").
std::string JoinTypeTokens(const std::vector<Token>& tokens, std::size_t begin,
                           std::size_t end);

// Joins tokens keeping a single space wherever the source had whitespace or
// a comment between them.
std::string JoinSourceTokens(const std::vector<Token>& tokens,
                             std::size_t begin, std::size_t end);

struct MinedMethod {
  MethodRecord method;
  MetricVector metrics;
  std::string path;
};

struct MineResult {
  std::vector<MinedMethod> methods;  // ordered by (path, start_line)
  std::vector<std::string> warnings;
  std::size_t files_mined = 0;
};

// Walks `paths` (directories are listed one level deep unless `recursive`),
// mining every file with a recognized extension. Per-file failures become
// warnings; throws IoError("no minable files") when nothing could be mined.
MineResult MinePaths(const std::vector<std::string>& paths, bool recursive);

// Column names of the metrics CSV, in order.
const std::vector<std::string>& MetricsCsvHeader();

void WriteMetricsCsv(std::ostream& out, const std::vector<MinedMethod>& rows);

}  // namespace mrpred::miner

#endif  // MRPRED_MINER_HPP_
