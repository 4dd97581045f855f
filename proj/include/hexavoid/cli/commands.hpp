// Copyright 2026 The hexavoid Authors
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

#ifndef HEXAVOID_CLI_COMMANDS_HPP_
#define HEXAVOID_CLI_COMMANDS_HPP_

#include <ostream>

namespace hexavoid::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

// Entry point for the `hexavoid` binary. Payloads go to `out`, diagnostics
// to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace hexavoid::cli

#endif  // HEXAVOID_CLI_COMMANDS_HPP_
