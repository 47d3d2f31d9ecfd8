// Copyright 2026 The symcirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMCIRC_TOOLS_CLI_HPP
#define SYMCIRC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace symcirc {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    /// A verification failed or an --expect value did not match.
    kExitAssertion = 1,
    /// Bad flags or a size guard was hit.
    kExitUsage = 2,
};

/// Runs the tool on `args` (without the program name). Results go to `out`
/// unless --out names a file; messages go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace symcirc

#endif
