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

#include "hexavoid/succession.hpp"

#include <algorithm>

namespace hexavoid {

SuccessionRule::SuccessionRule(FamilyName family) : family_(family) {}

SuccessionRule::SuccessionRule(FamilyName family, Threshold threshold)
    : family_(family), custom_(std::move(threshold)) {}

int SuccessionRule::threshold(const Label& p) const {
  if (custom_) return custom_(p);
  switch (family_) {
    case FamilyName::kHex8:
      return std::min(p.k + 2, std::max(p.k + 1, p.l + 2));
    case FamilyName::kHex6:
      return std::min(p.l + 1, std::max(p.l, p.m + 1));
    case FamilyName::kHex4:
      return p.m == p.x ? p.x : 0;
  }
  return 0;
}

int SuccessionRule::last_active_site(const Label& p) const {
  const int t = threshold(p);
  return t <= p.x - 2 ? t : p.x;
}

Label SuccessionRule::child_at_site(const Label& p, int right) const {
  Label child;
  if (right == 0) {
    child = {p.x + 1, p.k + 1, p.l + 1, p.m + 1};
  } else if (right <= p.m) {
    child = {right, right, right, 0};
  } else if (right <= p.l) {
    child = {right, right, p.m, 0};
  } else {
    child = {right, p.l, p.m, 0};
  }
  return project_label(child, family_);
}

std::vector<Label> SuccessionRule::children(const Label& p) const {
  const int s = last_active_site(p);
  std::vector<Label> out;
  out.reserve(s + 1);
  out.push_back(project_label({p.x + 1, p.k + 1, p.l + 1, p.m + 1}, family_));
  for (int i = 1; i <= s; ++i) {
    out.push_back(
        project_label({i, std::min(i, p.l), std::min(i, p.m), 0}, family_));
  }
  return out;
}

}  // namespace hexavoid
