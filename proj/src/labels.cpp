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

#include "hexavoid/labels.hpp"

#include <algorithm>

#include "hexavoid/errors.hpp"

namespace hexavoid {

std::string Label::to_string() const {
  return "(" + std::to_string(x) + "," + std::to_string(k) + "," +
         std::to_string(l) + "," + std::to_string(m) + ")";
}

Decomposition decompose(const Permutation& w) {
  if (w.empty()) throw InvalidPermutation("decompose: empty permutation");
  if (!avoids_321(w)) {
    throw Contains321("decompose: " + w.to_string() + " contains [3,2,1]");
  }
  const int n = w.size();
  std::vector<bool> is_min(n, false);
  int suffix_min = n + 1;
  for (int i = n - 1; i >= 0; --i) {
    if (w[i] < suffix_min) {
      suffix_min = w[i];
      is_min[i] = true;
    }
  }
  Decomposition d;
  for (int i = 0; i < n; ++i) {
    (is_min[i] ? d.b1 : d.b2).push_back({i + 1, w[i]});
  }
  const auto nth_from_top = [&](std::size_t r) {
    return d.b2.size() > r ? d.b2[d.b2.size() - 1 - r].value : 0;
  };
  d.m = nth_from_top(0);
  d.l = nth_from_top(1);
  d.k = nth_from_top(2);
  d.m_position = d.b2.empty() ? 0 : d.b2.back().position;
  return d;
}

Label label_of(const Permutation& w) {
  const Decomposition d = decompose(w);
  Label label;
  label.x = w.size() - d.m_position;
  for (int i = d.m_position; i < w.size(); ++i) {
    const int v = w[i];
    if (v > d.k) ++label.k;
    if (v > d.l) ++label.l;
    if (v > d.m) ++label.m;
  }
  return label;
}

Permutation delete_k_elements(const Permutation& w) {
  const Label label = label_of(w);
  std::span<const int> kept = w.values().first(w.size() - label.k);
  return Permutation::standardize(kept);
}

bool ends_in_max(const Permutation& w) {
  return !w.empty() && w[w.size() - 1] == w.size();
}

Label project_label(const Label& label, FamilyName family) {
  switch (family) {
    case FamilyName::kHex8:
      return label;
    case FamilyName::kHex6:
      return {label.x, label.x, label.l, label.m};
    case FamilyName::kHex4:
      return {label.x, label.x, label.x, label.m};
  }
  return label;
}

}  // namespace hexavoid
