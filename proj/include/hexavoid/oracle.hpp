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

#ifndef HEXAVOID_ORACLE_HPP_
#define HEXAVOID_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "hexavoid/labels.hpp"
#include "hexavoid/pattern_family.hpp"
#include "hexavoid/permutation.hpp"

namespace hexavoid {

// How a candidate child is tested. The parent is already clean, so any new
// occurrence must use the inserted maximum; kAnchored only searches those.
// kFull re-runs whole-permutation containment, for differential testing.
enum class ChildCheck { kAnchored, kFull };

struct OracleOptions {
  int max_n = 14;
  std::uint64_t budget_nodes = 0;  // cap on stored nodes, 0 = none
  int jobs = 1;
  ChildCheck check = ChildCheck::kAnchored;
};

struct TreeLevel {
  int n = 0;
  std::vector<Permutation> members;  // lexicographic
  // Labels are projected for the family (see project_label).
  std::map<Label, std::uint64_t> label_histogram;
};

struct Child {
  int right;  // entries to the right of the inserted maximum
  Permutation perm;
};

// Children of a member in site order: right = 0 first, then leftwards.
// Throws NotAMember when w is not in the family.
std::vector<Child> children_with_sites(const Permutation& w, FamilyName family,
                                       ChildCheck check = ChildCheck::kAnchored);
std::vector<Permutation> children(const Permutation& w, FamilyName family,
                                  ChildCheck check = ChildCheck::kAnchored);

// Materializes the pruned tree level by level and keeps every level.
class Oracle {
 public:
  explicit Oracle(FamilyName family, OracleOptions options = {});

  FamilyName family() const { return family_; }
  const OracleOptions& options() const { return options_; }

  // Throws BudgetExceeded when n > max_n or the node budget runs out.
  const TreeLevel& level(int n);
  std::uint64_t count_labeled(int n, const Label& label);
  int levels_built() const { return static_cast<int>(levels_.size()); }

 private:
  FamilyName family_;
  OracleOptions options_;
  std::vector<TreeLevel> levels_;  // levels_[i].n == i + 1
  std::uint64_t stored_nodes_ = 0;
};

TreeLevel enumerate_level(int n, FamilyName family,
                          const OracleOptions& options = {});
std::uint64_t count_labeled(int n, const Label& label, FamilyName family,
                            const OracleOptions& options = {});

std::uint64_t count_ending_in_max(const TreeLevel& level);

}  // namespace hexavoid

#endif  // HEXAVOID_ORACLE_HPP_
