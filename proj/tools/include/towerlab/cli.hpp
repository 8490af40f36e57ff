/*
   Copyright 2026 The towerlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef TOWERLAB_CLI_HPP
#define TOWERLAB_CLI_HPP

#include <string>
#include <vector>

namespace towerlab::cli {

struct RunResult {
  int exit_code = 0;
  std::string output;  // report artifact (also written to --out when given)
  std::string error;   // diagnostics for stderr
};

/// Exit status: 0 success, 1 failed verification, 2 precondition or usage,
/// 3 budget, 4 internal invariant.
RunResult run(const std::vector<std::string>& args);

}  // namespace towerlab::cli

#endif  // TOWERLAB_CLI_HPP
