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

#ifndef HEXAVOID_SUCCESSION_HPP_
#define HEXAVOID_SUCCESSION_HPP_

#include <functional>
#include <vector>

#include "hexavoid/labels.hpp"
#include "hexavoid/pattern_family.hpp"

namespace hexavoid {

// Label-space description of the pruned generating tree of one family.
//
// A node labelled (x,k,l,m) has S+1 children, produced by inserting n+1
// into the S+1 rightmost sites, with
//
//   S = T  if T <= x - 2,   S = x  otherwise,
//
// and T the family threshold:
//
//   HEX8  T = min(k+2, max(k+1, l+2))
//   HEX6  T = min(l+1, max(l,   m+1))    (HEX8 rule, one element up)
//   HEX4  T = x for the identity, 0 otherwise
//
// HEX6 and HEX4 labels are the projections of project_label().
class SuccessionRule {
 public:
  using Threshold = std::function<int(const Label&)>;

  explicit SuccessionRule(FamilyName family);
  // Custom threshold, used to check that conformance tests catch mutations.
  SuccessionRule(FamilyName family, Threshold threshold);

  FamilyName family() const { return family_; }

  int threshold(const Label& parent) const;
  // S: the leftmost active site has S entries to its right.
  int last_active_site(const Label& parent) const;
  int child_count(const Label& parent) const {
    return last_active_site(parent) + 1;
  }

  // Label of the child obtained by inserting at the site with `right`
  // entries to its right (0 <= right <= x), piecewise in right vs. l, m.
  Label child_at_site(const Label& parent, int right) const;

  // All children: (x+1,k+1,l+1,m+1) followed by
  // (i, min(i,l), min(i,m), 0) for i = 1..S, projected for the family.
  std::vector<Label> children(const Label& parent) const;

 private:
  FamilyName family_;
  Threshold custom_;
};

inline std::vector<Label> succeed(const Label& parent,
                                  FamilyName family = FamilyName::kHex8) {
  return SuccessionRule(family).children(parent);
}

}  // namespace hexavoid

#endif  // HEXAVOID_SUCCESSION_HPP_
