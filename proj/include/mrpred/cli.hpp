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

// The mrpred command line: mine, label, rank, sweep, grid, evaluate, report.

#ifndef MRPRED_CLI_HPP_
#define MRPRED_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mrpred::cli {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 42;

// `args` includes the program name. Exit status: 0 success, 1 invalid input
// or usage, 2 runtime failure.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int Run(int argc, const char* const* argv);

// Writes to a sibling temporary file and renames it over `path`.
void WriteFileAtomic(const std::string& path, std::string_view content);

}  // namespace mrpred::cli

#endif  // MRPRED_CLI_HPP_
