// Copyright 2026 The Photothermal Authors
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

#ifndef PHOTOTHERMAL_TOOLS_CLI_H_
#define PHOTOTHERMAL_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace photothermal::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitBadInput = 2,
  kExitNumerical = 3,
  kExitPartialSweep = 4,
};

// Runs one command line (args excludes the program name). Results go to
// `out`, diagnostics and warnings to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace photothermal::cli

#endif  // PHOTOTHERMAL_TOOLS_CLI_H_
