// Copyright 2026 The mdist Authors
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

#ifndef MDIST_TOOLS_CLI_HPP_
#define MDIST_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mdist::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailedRecords = 1;  // verify/sweep found violations
inline constexpr int kBadInput = 2;       // usage, file, graph or point errors
inline constexpr int kSpectralFailure = 3;

// Runs one subcommand. Reports go to `out` in a single write; diagnostics go
// to `err` as one JSON object per line.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mdist::cli

#endif  // MDIST_TOOLS_CLI_HPP_
