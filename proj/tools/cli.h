// Copyright 2026 The Submod Authors.
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

#ifndef SUBMOD_TOOLS_CLI_H_
#define SUBMOD_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace submod::cli {

inline constexpr char kToolVersion[] = "0.1.0";

enum ExitCode {
  kExitOk = 0,
  kExitInput = 1,
  kExitNumerical = 2,
  kExitPrecondition = 3,
};

// Runs one command; `args` excludes the program name. The report is one
// JSON line on `out`; errors go to `err` as a JSON line as well.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

std::uint64_t Fnv1a64(std::string_view bytes);

}  // namespace submod::cli

#endif  // SUBMOD_TOOLS_CLI_H_
