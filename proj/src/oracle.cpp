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

#include "hexavoid/oracle.hpp"

#include <algorithm>
#include <thread>

#include "hexavoid/errors.hpp"

namespace hexavoid {

namespace {

const Permutation& pattern_321() {
  static const Permutation p{3, 2, 1};
  return p;
}

bool child_is_member(const Permutation& child, const PatternFamily& fam,
                     ChildCheck check) {
  if (check == ChildCheck::kFull) return is_member(child, fam);
  const int pos = child.position_of_max();
  if (contains_anchored(child, pattern_321(), pos, 0)) return false;
  for (const Permutation& p : fam.patterns) {
    if (contains_anchored(child, p, pos, p.position_of_max())) return false;
  }
  return true;
}

std::vector<Child> expand(const Permutation& w, const PatternFamily& fam,
                          ChildCheck check) {
  std::vector<Child> out;
  for (int right = 0; right <= w.size(); ++right) {
    Permutation child = w.insert_max(right);
    if (child_is_member(child, fam, check)) {
      out.push_back({right, std::move(child)});
    }
  }
  return out;
}

struct Partial {
  std::vector<Permutation> members;
  std::map<Label, std::uint64_t> histogram;
};

Partial expand_range(std::span<const Permutation> parents,
                     const PatternFamily& fam, ChildCheck check) {
  Partial part;
  for (const Permutation& w : parents) {
    for (Child& c : expand(w, fam, check)) {
      ++part.histogram[project_label(label_of(c.perm), fam.name)];
      part.members.push_back(std::move(c.perm));
    }
  }
  return part;
}

}  // namespace

std::vector<Child> children_with_sites(const Permutation& w, FamilyName family,
                                       ChildCheck check) {
  const PatternFamily& fam = hexavoid::family(family);
  if (!is_member(w, fam)) {
    throw NotAMember(w.to_string() + " is not a " +
                     std::string(family_id(family)) + " member");
  }
  return expand(w, fam, check);
}

std::vector<Permutation> children(const Permutation& w, FamilyName family,
                                  ChildCheck check) {
  std::vector<Permutation> out;
  for (Child& c : children_with_sites(w, family, check)) {
    out.push_back(std::move(c.perm));
  }
  return out;
}

Oracle::Oracle(FamilyName family, OracleOptions options)
    : family_(family), options_(options) {}

const TreeLevel& Oracle::level(int n) {
  if (n < 1) throw std::invalid_argument("oracle level must be >= 1");
  if (n > options_.max_n) {
    throw BudgetExceeded("oracle: n=" + std::to_string(n) +
                             " exceeds the level budget max_n=" +
                             std::to_string(options_.max_n),
                         levels_built());
  }
  if (levels_.empty()) {
    TreeLevel root;
    root.n = 1;
    root.members.push_back(Permutation{1});
    root.label_histogram[project_label({1, 1, 1, 1}, family_)] = 1;
    levels_.push_back(std::move(root));
    stored_nodes_ = 1;
  }
  const PatternFamily& fam = hexavoid::family(family_);
  while (levels_built() < n) {
    const TreeLevel& parent = levels_.back();
    const int jobs = std::max(1, options_.jobs);
    const std::size_t count = parent.members.size();
    const std::size_t chunk = (count + jobs - 1) / jobs;
    std::vector<Partial> parts(jobs);
    std::vector<std::thread> workers;
    std::span<const Permutation> all(parent.members);
    for (int j = 0; j < jobs; ++j) {
      const std::size_t begin = std::min(count, j * chunk);
      const std::size_t end = std::min(count, begin + chunk);
      auto work = [&, j, begin, end] {
        parts[j] = expand_range(all.subspan(begin, end - begin), fam,
                                options_.check);
      };
      if (jobs == 1) {
        work();
      } else {
        workers.emplace_back(work);
      }
    }
    for (std::thread& t : workers) t.join();

    TreeLevel next;
    next.n = parent.n + 1;
    for (Partial& part : parts) {
      next.members.insert(next.members.end(),
                          std::make_move_iterator(part.members.begin()),
                          std::make_move_iterator(part.members.end()));
      for (const auto& [label, c] : part.histogram) {
        next.label_histogram[label] += c;
      }
    }
    std::sort(next.members.begin(), next.members.end());
    if (options_.budget_nodes != 0 &&
        stored_nodes_ + next.members.size() > options_.budget_nodes) {
      throw BudgetExceeded(
          "oracle: level " + std::to_string(next.n) + " would exceed the " +
              std::to_string(options_.budget_nodes) + "-node budget",
          levels_built());
    }
    stored_nodes_ += next.members.size();
    levels_.push_back(std::move(next));
  }
  return levels_[n - 1];
}

std::uint64_t Oracle::count_labeled(int n, const Label& label) {
  const auto& hist = level(n).label_histogram;
  const auto it = hist.find(label);
  return it == hist.end() ? 0 : it->second;
}

TreeLevel enumerate_level(int n, FamilyName family,
                          const OracleOptions& options) {
  Oracle oracle(family, options);
  return oracle.level(n);
}

std::uint64_t count_labeled(int n, const Label& label, FamilyName family,
                            const OracleOptions& options) {
  Oracle oracle(family, options);
  return oracle.count_labeled(n, label);
}

std::uint64_t count_ending_in_max(const TreeLevel& level) {
  return std::count_if(level.members.begin(), level.members.end(),
                       [](const Permutation& w) { return ends_in_max(w); });
}

}  // namespace hexavoid
