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

#ifndef HEXAVOID_CLI_VERIFY_HPP_
#define HEXAVOID_CLI_VERIFY_HPP_

#include <vector>

#include "hexavoid/cli/report.hpp"
#include "hexavoid/succession.hpp"

namespace hexavoid::cli {

enum class VerifyLevel { kFast, kFull };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::kFast;
  int jobs = 1;
  // Replaces the HEX8 threshold T in the rule under test. Lets tests confirm
  // that a perturbed rule is caught.
  SuccessionRule::Threshold hex8_threshold;
};

// Rows alpha..epsilon for n = 1..12 as printed.
const std::vector<std::vector<int>>& published_hex8_table();

// Oracle bound: n <= 9 (fast) or n <= 12 (full).
int oracle_bound(VerifyLevel level);

// Cross-method checks in a fixed order; output never depends on jobs.
std::vector<Check> run_verification(const VerifyOptions& options);

}  // namespace hexavoid::cli

#endif  // HEXAVOID_CLI_VERIFY_HPP_
