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

#ifndef HEXAVOID_PERMUTATION_HPP_
#define HEXAVOID_PERMUTATION_HPP_

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hexavoid {

// A permutation of {1..n} in one-line notation. Length 0 is the unique
// element of S_0.
class Permutation {
 public:
  Permutation() = default;

  // Throws InvalidPermutation unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values)
      : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int n);

  // Order-isomorphic rescaling of distinct integers onto 1..size.
  static Permutation standardize(std::span<const int> values);

  // Accepts "[4,6,7,1,8,2,3,5]", "4,6,7,1,8,2,3,5" or, for n < 10, the
  // comma-free "46718235".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  int operator[](int index) const { return values_[index]; }
  std::span<const int> values() const { return values_; }

  // Inserts n+1 into the site that has `right` entries to its right.
  Permutation insert_max(int right) const;

  // The parent in the generating tree: w with its maximum removed.
  Permutation remove_max() const;

  // 0-based position of the value n, or -1 when empty.
  int position_of_max() const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

  std::vector<int> values_;
};

// True iff some subsequence of `host` is order-isomorphic to `pattern`.
// The empty pattern is contained in everything.
bool contains(const Permutation& host, const Permutation& pattern);

// Like contains(), but only occurrences that map pattern index
// `pattern_index` onto host position `host_position` count.
bool contains_anchored(const Permutation& host, const Permutation& pattern,
                       int host_position, int pattern_index);

// Linear-time test for [3,2,1]: w avoids 321 iff the entries that are not
// right-to-left minima increase.
bool avoids_321(const Permutation& w);

}  // namespace hexavoid

#endif  // HEXAVOID_PERMUTATION_HPP_
