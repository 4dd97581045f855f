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

#ifndef HEXAVOID_TREE_CHECKS_HPP_
#define HEXAVOID_TREE_CHECKS_HPP_

#include <cstdint>
#include <string>

#include "hexavoid/oracle.hpp"
#include "hexavoid/recurrences.hpp"
#include "hexavoid/succession.hpp"

namespace hexavoid {

struct PropertyResult {
  std::uint64_t examined = 0;
  std::uint64_t violations = 0;
  std::string first_violation;

  bool ok() const { return violations == 0; }
  void fail(std::string what) {
    if (violations++ == 0) first_violation = std::move(what);
  }
};

// Expands every node of `level` by brute force and compares with `rule`:
// child count S+1, active sites exactly the S+1 rightmost, per-site child
// labels, and the multiset of child labels.
PropertyResult check_succession_conformance(
    const TreeLevel& level, const SuccessionRule& rule,
    ChildCheck check = ChildCheck::kAnchored);

// HEX8 only. On level n: d_K keeps membership both ways, sends each class
// H_n(x,k,l,m) injectively into H_{n-k}(x-k,0,0,0), and the class sizes
// agree. For x == k the target is the set of members ending in their
// maximum (the empty permutation when x == k == n).
PropertyResult check_deletion_lemma(Oracle& oracle, int n);

// The five sequences read off HEX8 oracle levels:
//   alpha_n = #{w in H_{n+1} ending in n+1},  beta_n = h_{n+1}(1,0,0,0),
//   gamma_n = h_{n+1}(2,0,0,0),  delta_n = h_{n+1}(3,0,0,0),
//   epsilon_n = h_{n+xbar-3}(xbar,0,0,0).
// Uses levels up to max(n_max + 1, n_max + xbar - 3).
SequenceTable table_from_oracle(Oracle& oracle, int n_max, int xbar = 4);

// #{w in level : {n, n-1} are both outside the right-to-left minima}.
std::uint64_t count_top_two_in_b2(const TreeLevel& level);

}  // namespace hexavoid

#endif  // HEXAVOID_TREE_CHECKS_HPP_
