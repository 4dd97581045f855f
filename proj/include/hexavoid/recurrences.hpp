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

#ifndef HEXAVOID_RECURRENCES_HPP_
#define HEXAVOID_RECURRENCES_HPP_

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "hexavoid/bigint.hpp"
#include "hexavoid/labels.hpp"
#include "hexavoid/pattern_family.hpp"

namespace hexavoid {

// alpha_n = sum_i coefficients[i] * alpha_{n-1-i} for n >= valid_from;
// below that, alpha_n = base_values[n - base_start].
struct RecurrenceSpec {
  FamilyName family;
  int order;
  std::vector<std::int64_t> coefficients;
  std::vector<BigInt> base_values;
  int base_start;
  int valid_from;
};

// HEX8 takes alpha_0 = 1 (the empty permutation) so that its order-six
// recurrence holds from n = 6. HEX6 and HEX4 start at alpha_1 and only
// apply once every referenced index is >= 1.
const RecurrenceSpec& recurrence_for(FamilyName family);

BigInt alpha_via_recurrence(int n, const RecurrenceSpec& spec);
// alpha_1 .. alpha_{n_max}.
std::vector<BigInt> alpha_sequence(int n_max, const RecurrenceSpec& spec);

BigInt hex4_closed_form(int n);  // (n-1)^2 + 1
BigInt catalan(int n);           // |S_n(321)|

enum class Sequence { kAlpha, kBeta, kGamma, kDelta, kEpsilon };
inline constexpr std::array<Sequence, 5> kAllSequences = {
    Sequence::kAlpha, Sequence::kBeta, Sequence::kGamma, Sequence::kDelta,
    Sequence::kEpsilon};
std::string_view sequence_name(Sequence s);  // "alpha", ..., "epsilon"

// The five HEX8 auxiliary sequences, indexed from 1.
struct SequenceTable {
  int n_max = 0;
  std::array<std::vector<BigInt>, 5> rows;  // rows[s][n-1]

  const BigInt& at(Sequence s, int n) const {
    return rows[static_cast<int>(s)].at(n - 1);
  }
  // Extends the table to n <= 0: alpha_0 = 1, everything else 0.
  BigInt value(Sequence s, int n) const;
};

// alpha from the main recurrence, then
//   beta_n    = alpha_n - 2 alpha_{n-1}                     (n >= 3)
//   gamma_n   = alpha_n - 3 alpha_{n-1} + alpha_{n-2}       (n >= 4)
//   epsilon_n = 2 alpha_{n-3} - 5 alpha_{n-4} + alpha_{n-5} (n >= 6)
//   delta_n   = epsilon_{n+1} + delta_{n-1}                 (n >= 6)
// with delta_5 = 1 and every earlier entry 0. Requires n_max >= 6.
SequenceTable five_sequences(int n_max);

// h_n(x,k,l,m) for HEX8 as one of the five sequences, keyed by x - k:
//   0 -> alpha_{n-x-1} (1 when x = n),  1 -> beta_{n-x},
//   2 -> gamma_{n-x+1},  3 -> delta_{n-x+2},  >=4 -> epsilon_{n-x+3}.
// `table` must reach n + 2.
BigInt predicted_label_count(int n, const Label& label,
                             const SequenceTable& table);

}  // namespace hexavoid

#endif  // HEXAVOID_RECURRENCES_HPP_
