// Copyright 2026 The evoweights Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace evoweights {

/// Process exit status of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,     // bad flags or option values
  kExitParse = 2,     // unreadable or malformed dataset
  kExitSpec = 3,      // column spec errors, normalization preconditions
  kExitDynamics = 4,  // the iteration left the domain of the update
  kExitOutput = 5,    // cannot write the output file
};

/// Runs the command line tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace evoweights
