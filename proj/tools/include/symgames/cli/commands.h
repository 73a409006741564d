// Copyright 2026 The symgames Authors
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


#ifndef SYMGAMES_CLI_COMMANDS_H_
#define SYMGAMES_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace symgames::cli {

// Runs one command line (without the program name). The JSON report goes to
// the --report file when given and to `out` otherwise; diagnostics go to
// `err`. Returns 0 when every bound holds, 1 when a bound or lemma fails and
// 2 on malformed input.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace symgames::cli

#endif  // SYMGAMES_CLI_COMMANDS_H_
