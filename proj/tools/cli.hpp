// Copyright 2026 The kdom Authors
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

#ifndef KDOM_TOOLS_CLI_HPP
#define KDOM_TOOLS_CLI_HPP

#include <iosfwd>

namespace kdom::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kVerificationFailure = 2,
  kTimeoutWithIncumbent = 3,
};

// Entry point of the `kdom` tool; output goes to `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kdom::cli

#endif  // KDOM_TOOLS_CLI_HPP
