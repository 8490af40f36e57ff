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


#ifndef TOWERLAB_VERIFY_HPP
#define TOWERLAB_VERIFY_HPP

#include <string>
#include <vector>

#include "towerlab/common.hpp"

namespace towerlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool skipped = false;  // part of the criterion left out by the profile
  std::vector<std::string> details;  // one "key=value" fact per entry
  double seconds = 0;
};

struct VerifyReport {
  std::string profile;
  std::vector<CriterionResult> criteria;
  bool all_passed() const;
};

/// Acceptance suite. "quick" leaves out the d = 28 twist run; "full" runs everything.
VerifyReport verify_all(const std::string& profile, const Budget& budget, unsigned threads = 1);

/// A single criterion (1..11) at the given profile.
CriterionResult verify_criterion(int id, const std::string& profile, const Budget& budget, unsigned threads = 1);

}  // namespace towerlab

#endif  // TOWERLAB_VERIFY_HPP
