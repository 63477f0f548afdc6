// Copyright 2026 The Framescope Authors.
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

// Hand-built fixtures: grounding excerpts and tagger sentences.

#ifndef FRAMESCOPE_TESTS_SUPPORT_FIXTURES_H_
#define FRAMESCOPE_TESTS_SUPPORT_FIXTURES_H_

#include <string>
#include <utility>
#include <vector>

namespace framescope::testing {

struct GroundingCase {
  std::string excerpt;
  bool grounded;
};

// Article body the grounding excerpts are checked against.
const std::string &GroundingBody();
// 30 excerpts: 10 verbatim, 10 verbatim after normalization (elisions,
// quotes, case, whitespace), 10 paraphrases.
const std::vector<GroundingCase> &GroundingCases();

struct TriggerLabel {
  std::string frame;
  std::string trigger;
};

struct RoleLabel {
  // Trigger text of the Attack/Killing occurrence the roles belong to.
  std::string trigger;
  // Empty when the role is expected to stay unset.
  std::string assailant;
  std::string victim;
};

struct TaggerCase {
  std::string sentence;
  std::vector<TriggerLabel> triggers;
  // Only set for role-bearing sentences.
  std::vector<RoleLabel> roles;
};

// 50 sentences; the first 20 carry hand-traced Assailant/Victim labels.
const std::vector<TaggerCase> &TaggerCases();

}  // namespace framescope::testing

#endif  // FRAMESCOPE_TESTS_SUPPORT_FIXTURES_H_
