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

#include "hexavoid/tree_checks.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hexavoid {

namespace {

std::vector<Permutation> all_321_avoiders(int n) {
  std::vector<Permutation> level{Permutation{}};
  for (int size = 0; size < n; ++size) {
    std::vector<Permutation> next;
    for (const Permutation& w : level) {
      for (int right = 0; right <= size; ++right) {
        Permutation child = w.insert_max(right);
        if (avoids_321(child)) next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

PropertyResult check_succession_conformance(const TreeLevel& level,
                                            const SuccessionRule& rule,
                                            ChildCheck check) {
  PropertyResult result;
  const FamilyName fam = rule.family();
  for (const Permutation& w : level.members) {
    ++result.examined;
    const Label label = project_label(label_of(w), fam);
    const std::vector<Child> kids = children_with_sites(w, fam, check);
    const int s = rule.last_active_site(label);
    const std::string where = w.to_string() + " " + label.to_string();

    if (static_cast<int>(kids.size()) != s + 1) {
      result.fail(where + ": " + std::to_string(kids.size()) +
                  " children, rule predicts " + std::to_string(s + 1));
      continue;
    }
    bool sites_ok = true;
    for (int i = 0; i <= s; ++i) sites_ok = sites_ok && kids[i].right == i;
    if (!sites_ok) {
      result.fail(where + ": active sites are not the rightmost S+1");
      continue;
    }
    std::vector<Label> actual;
    bool per_site_ok = true;
    for (const Child& c : kids) {
      const Label got = project_label(label_of(c.perm), fam);
      actual.push_back(got);
      if (got != rule.child_at_site(label, c.right)) {
        result.fail(where + ": site " + std::to_string(c.right) +
                    " gives " + got.to_string());
        per_site_ok = false;
        break;
      }
    }
    if (!per_site_ok) continue;
    std::vector<Label> predicted = rule.children(label);
    std::sort(actual.begin(), actual.end());
    std::sort(predicted.begin(), predicted.end());
    if (actual != predicted) {
      result.fail(where + ": child label multiset differs from the rule");
    }
  }
  return result;
}

PropertyResult check_deletion_lemma(Oracle& oracle, int n) {
  if (oracle.family() != FamilyName::kHex8) {
    throw std::invalid_argument("check_deletion_lemma: HEX8 oracle required");
  }
  PropertyResult result;
  const TreeLevel& here = oracle.level(n);
  std::map<Label, std::set<Permutation>> images;
  for (const Permutation& w : here.members) {
    ++result.examined;
    const Label label = label_of(w);
    const Permutation image = delete_k_elements(w);
    const std::string where = w.to_string() + " " + label.to_string();
    if (!is_member(image, FamilyName::kHex8)) {
      result.fail(where + ": image " + image.to_string() + " is not a member");
      continue;
    }
    if (label.x == label.k) {
      if (!image.empty() && !ends_in_max(image)) {
        result.fail(where + ": image " + image.to_string() +
                    " does not end in its maximum");
        continue;
      }
    } else if (label_of(image) != Label{label.x - label.k, 0, 0, 0}) {
      result.fail(where + ": image label " + label_of(image).to_string());
      continue;
    }
    if (!images[label].insert(image).second) {
      result.fail(where + ": d_K not injective, image " + image.to_string());
    }
  }
  for (const auto& [label, imgs] : images) {
    const int target_n = n - label.k;
    std::uint64_t target = 0;
    if (target_n == 0) {
      target = 1;
    } else if (label.x == label.k) {
      target = count_ending_in_max(oracle.level(target_n));
    } else {
      target = oracle.count_labeled(target_n, {label.x - label.k, 0, 0, 0});
    }
    const std::uint64_t size = here.label_histogram.at(label);
    if (size != target || imgs.size() != size) {
      result.fail("h_" + std::to_string(n) + label.to_string() + " = " +
                  std::to_string(size) + " but target class has " +
                  std::to_string(target));
    }
  }
  // Reverse direction: no 321-avoider outside the family maps into it.
  for (const Permutation& w : all_321_avoiders(n)) {
    if (is_member(w, FamilyName::kHex8)) continue;
    ++result.examined;
    if (is_member(delete_k_elements(w), FamilyName::kHex8)) {
      result.fail(w.to_string() + ": non-member maps into the family");
    }
  }
  return result;
}

SequenceTable table_from_oracle(Oracle& oracle, int n_max, int xbar) {
  if (oracle.family() != FamilyName::kHex8) {
    throw std::invalid_argument("table_from_oracle: HEX8 oracle required");
  }
  if (xbar < 4) throw std::invalid_argument("table_from_oracle: xbar >= 4");
  SequenceTable t;
  t.n_max = n_max;
  for (auto& row : t.rows) row.assign(n_max, 0);
  for (int n = 1; n <= n_max; ++n) {
    const TreeLevel& next = oracle.level(n + 1);
    t.rows[0][n - 1] = count_ending_in_max(next);
    for (int j = 1; j <= 3; ++j) {
      t.rows[j][n - 1] = oracle.count_labeled(n + 1, {j, 0, 0, 0});
    }
    const int eps_level = n + xbar - 3;
    t.rows[4][n - 1] = oracle.count_labeled(eps_level, {xbar, 0, 0, 0});
  }
  return t;
}

std::uint64_t count_top_two_in_b2(const TreeLevel& level) {
  std::uint64_t count = 0;
  for (const Permutation& w : level.members) {
    const int n = w.size();
    if (n < 2) continue;
    const Decomposition d = decompose(w);
    const bool has_n = std::any_of(d.b2.begin(), d.b2.end(),
                                   [&](const Entry& e) { return e.value == n; });
    const bool has_n1 = std::any_of(
        d.b2.begin(), d.b2.end(), [&](const Entry& e) { return e.value == n - 1; });
    if (has_n && has_n1) ++count;
  }
  return count;
}

}  // namespace hexavoid
