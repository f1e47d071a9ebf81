// Copyright 2026 The ontoforge Authors.
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

#ifndef ONTOFORGE_CLI_HPP_
#define ONTOFORGE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ontoforge::cli {

// Exit codes of the `ontoforge` executable.
enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kLintDenied = 2,
  kUsageError = 3,  // also I/O failures
};

// Runs one command line (without the program name). Human-readable output
// goes to `out`; diagnostics and reports that accompany file output go to
// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontoforge::cli

#endif  // ONTOFORGE_CLI_HPP_
