// Copyright 2026 The milptd Authors
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


#ifndef MILPTD_TOOLS_CLI_HPP_
#define MILPTD_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace milptd::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,
  kUsage = 2,
  kCapExceeded = 3,
  kInvariant = 4,
};

// Runs one command. args excludes the program name, e.g.
// {"solve", "file.milp", "--format", "machine"}. A missing or "-" input
// path reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace milptd::cli

#endif  // MILPTD_TOOLS_CLI_HPP_
