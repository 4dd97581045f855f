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

#ifndef HEXAVOID_LABEL_DP_HPP_
#define HEXAVOID_LABEL_DP_HPP_

#include <map>
#include <vector>

#include "hexavoid/bigint.hpp"
#include "hexavoid/labels.hpp"
#include "hexavoid/pattern_family.hpp"
#include "hexavoid/succession.hpp"

namespace hexavoid {

// Number of family members of length n carrying each label. Only labels
// reachable from the root are stored.
struct LabelDistribution {
  int n = 1;
  std::map<Label, BigInt> counts;

  BigInt total() const;
};

// Level 1: the single permutation [1], labelled (1,1,1,1).
LabelDistribution root_distribution();

LabelDistribution advance(const LabelDistribution& dist,
                          const SuccessionRule& rule);
inline LabelDistribution advance(const LabelDistribution& dist,
                                 FamilyName family) {
  return advance(dist, SuccessionRule(family));
}

// Level-n distribution, n >= 1.
LabelDistribution distribution_at(int n, FamilyName family);

// total(1), ..., total(n_max); element i is the count at length i+1.
std::vector<BigInt> totals_through(int n_max, FamilyName family);

}  // namespace hexavoid

#endif  // HEXAVOID_LABEL_DP_HPP_
