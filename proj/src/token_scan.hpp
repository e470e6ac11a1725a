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

// Token-stream helpers shared by the segmenter and the metric extractors.

#ifndef MRPRED_SRC_TOKEN_SCAN_HPP_
#define MRPRED_SRC_TOKEN_SCAN_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "mrpred/lexer.hpp"

namespace mrpred::miner::internal {

inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

using Tokens = std::vector<Token>;

inline bool At(const Tokens& t, std::size_t i, std::string_view text) {
  return i < t.size() && t[i].text == text;
}

inline bool IsIdent(const Tokens& t, std::size_t i) {
  return i < t.size() && t[i].kind == TokenKind::kIdentifier;
}

// Index of the token closing the group opened at `open`, or kNone.
std::size_t MatchForward(const Tokens& t, std::size_t open,
                         std::size_t limit = kNone);

// Skips a balanced `<...>` starting at `open` and returns the index past the
// closing angle. `>>` and `>>>` close several levels. Returns kNone if the
// contents are not type-like or the group is unterminated before `limit`.
std::size_t SkipAngles(const Tokens& t, std::size_t open, std::size_t limit);

// Splits [begin, end) at commas outside (), [], {} and, when `angles` is set,
// outside <>. Returns [begin, end) pairs; empty input yields no entries.
std::vector<std::pair<std::size_t, std::size_t>> SplitTopLevel(
    const Tokens& t, std::size_t begin, std::size_t end, bool angles);

bool IsTypeKeyword(Language language, std::string_view word);
bool IsJavaModifier(std::string_view word);
bool IsCppSpecifier(std::string_view word);

}  // namespace mrpred::miner::internal

#endif  // MRPRED_SRC_TOKEN_SCAN_HPP_
