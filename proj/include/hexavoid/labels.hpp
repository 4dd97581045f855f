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

#ifndef HEXAVOID_LABELS_HPP_
#define HEXAVOID_LABELS_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hexavoid/pattern_family.hpp"
#include "hexavoid/permutation.hpp"

namespace hexavoid {

struct Entry {
  int position;  // 1-based
  int value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

// Split of a 321-avoiding permutation into its right-to-left minima (b1,
// always containing the last entry) and the remaining entries (b2). Both
// value sequences increase left to right.
//
// m, l, k are the largest, second and third largest values of b2 (0 when
// absent). Everything right of m_position lies in b1; that suffix is the
// active region.
struct Decomposition {
  std::vector<Entry> b1;
  std::vector<Entry> b2;
  int m = 0;
  int l = 0;
  int k = 0;
  int m_position = 0;  // 1-based, 0 when b2 is empty
};

// Generating-tree label: x is the size of the active region; k, l, m count
// active values above K, L, M. Always x >= k >= l >= m.
struct Label {
  int x = 0;
  int k = 0;
  int l = 0;
  int m = 0;

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;

  bool well_formed() const { return x >= k && k >= l && l >= m && m >= 0; }
  std::string to_string() const;
  // Dense key for hashing; each component must fit in 16 bits.
  std::uint64_t key() const {
    return (std::uint64_t(x) << 48) | (std::uint64_t(k) << 32) |
           (std::uint64_t(l) << 16) | std::uint64_t(m);
  }
  static Label from_key(std::uint64_t key) {
    return {int(key >> 48), int((key >> 32) & 0xffff), int((key >> 16) & 0xffff),
            int(key & 0xffff)};
  }
};

// Throws Contains321 for inputs containing [3,2,1] and InvalidPermutation
// for the empty permutation.
Decomposition decompose(const Permutation& w);
Label label_of(const Permutation& w);

// Removes the k K-elements (the last k entries) and rescales. When x == k
// the image ends in its maximum (empty if w is the identity).
Permutation delete_k_elements(const Permutation& w);

bool ends_in_max(const Permutation& w);

// Labels for the smaller families track fewer elements of b2: HEX6 keeps
// L and M, HEX4 keeps only M. An untracked element is treated as absent,
// so its count equals x: HEX6 -> (x, x, l, m), HEX4 -> (x, x, x, m).
Label project_label(const Label& label, FamilyName family);

}  // namespace hexavoid

#endif  // HEXAVOID_LABELS_HPP_
