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

// Minimal RFC 4180 reading and writing.

#ifndef MRPRED_CSV_HPP_
#define MRPRED_CSV_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mrpred::csv {

using Row = std::vector<std::string>;

// Reads all records. Quoted fields may contain commas, doubled quotes and
// newlines. A trailing empty line is ignored. Throws ParseError on an
// unterminated quote.
std::vector<Row> ReadAll(std::istream& in);

// Always quotes.
std::string Quote(std::string_view field);

void WriteRow(std::ostream& out, const Row& row);

}  // namespace mrpred::csv

#endif  // MRPRED_CSV_HPP_
