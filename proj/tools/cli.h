// Copyright 2026 The rdvlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Subcommands: sweep, certify, solve, oracle,
// show-strategy, eval-form.

#ifndef RDVLP_TOOLS_CLI_H_
#define RDVLP_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace rendezvous::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInconsistent = 2,  // failed certificate, replay mismatch, oracle failure
};

// args excludes the program name. Results go to `out` unless --output names
// a file; diagnostics and progress go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace rendezvous::cli

#endif  // RDVLP_TOOLS_CLI_H_
