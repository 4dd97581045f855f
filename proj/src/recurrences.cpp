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

#include "hexavoid/recurrences.hpp"

#include <stdexcept>

namespace hexavoid {

namespace {

std::vector<BigInt> big(std::initializer_list<int> values) {
  return {values.begin(), values.end()};
}

}  // namespace

const RecurrenceSpec& recurrence_for(FamilyName family) {
  static const RecurrenceSpec hex8{
      FamilyName::kHex8, 6, {6, -11, 9, -4, -4, 1}, big({1, 1, 2, 5, 14, 42}),
      0, 6};
  static const RecurrenceSpec hex6{
      FamilyName::kHex6, 5, {4, -4, 3, 1, -1}, big({1, 2, 5, 14, 42}), 1, 6};
  static const RecurrenceSpec hex4{FamilyName::kHex4, 3, {3, -3, 1},
                                   big({1, 2, 5}), 1, 4};
  switch (family) {
    case FamilyName::kHex8:
      return hex8;
    case FamilyName::kHex6:
      return hex6;
    case FamilyName::kHex4:
      return hex4;
  }
  return hex8;
}

std::vector<BigInt> alpha_sequence(int n_max, const RecurrenceSpec& spec) {
  if (n_max < 0) throw std::invalid_argument("alpha_sequence: n_max < 0");
  // values[i] holds alpha_{base_start + i}.
  std::vector<BigInt> values(spec.base_values.begin(), spec.base_values.end());
  for (int n = spec.base_start + static_cast<int>(values.size()); n <= n_max;
       ++n) {
    BigInt next = 0;
    for (int i = 0; i < spec.order; ++i) {
      next += spec.coefficients[i] * values[n - 1 - i - spec.base_start];
    }
    values.push_back(std::move(next));
  }
  std::vector<BigInt> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(values[n - spec.base_start]);
  return out;
}

BigInt alpha_via_recurrence(int n, const RecurrenceSpec& spec) {
  if (n < 1) throw std::invalid_argument("alpha_via_recurrence: n must be >= 1");
  return alpha_sequence(n, spec).back();
}

BigInt hex4_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("hex4_closed_form: n must be >= 1");
  BigInt d = n - 1;
  return d * d + 1;
}

BigInt catalan(int n) {
  BigInt c = 1;  // C_0
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::string_view sequence_name(Sequence s) {
  switch (s) {
    case Sequence::kAlpha:
      return "alpha";
    case Sequence::kBeta:
      return "beta";
    case Sequence::kGamma:
      return "gamma";
    case Sequence::kDelta:
      return "delta";
    case Sequence::kEpsilon:
      return "epsilon";
  }
  return "?";
}

BigInt SequenceTable::value(Sequence s, int n) const {
  if (n <= 0) return (s == Sequence::kAlpha && n == 0) ? 1 : 0;
  return at(s, n);
}

SequenceTable five_sequences(int n_max) {
  if (n_max < 6) throw std::invalid_argument("five_sequences: n_max must be >= 6");
  // alpha[i] = alpha_i for 0 <= i <= n_max + 1 (delta_n needs epsilon_{n+1}).
  std::vector<BigInt> alpha{1};
  for (BigInt& a : alpha_sequence(n_max + 1, recurrence_for(FamilyName::kHex8))) {
    alpha.push_back(std::move(a));
  }
  std::vector<BigInt> epsilon(n_max + 2, 0);  // epsilon[i] = epsilon_i
  for (int n = 6; n <= n_max + 1; ++n) {
    epsilon[n] = 2 * alpha[n - 3] - 5 * alpha[n - 4] + alpha[n - 5];
  }

  SequenceTable t;
  t.n_max = n_max;
  for (auto& row : t.rows) row.assign(n_max, 0);
  auto& a = t.rows[static_cast<int>(Sequence::kAlpha)];
  auto& b = t.rows[static_cast<int>(Sequence::kBeta)];
  auto& g = t.rows[static_cast<int>(Sequence::kGamma)];
  auto& d = t.rows[static_cast<int>(Sequence::kDelta)];
  auto& e = t.rows[static_cast<int>(Sequence::kEpsilon)];
  for (int n = 1; n <= n_max; ++n) {
    a[n - 1] = alpha[n];
    if (n >= 3) b[n - 1] = alpha[n] - 2 * alpha[n - 1];
    if (n >= 4) g[n - 1] = alpha[n] - 3 * alpha[n - 1] + alpha[n - 2];
    e[n - 1] = epsilon[n];
    if (n == 5) d[n - 1] = 1;
    if (n >= 6) d[n - 1] = epsilon[n + 1] + d[n - 2];
  }
  return t;
}

BigInt predicted_label_count(int n, const Label& label,
                             const SequenceTable& table) {
  if (table.n_max < n + 2) {
    throw std::invalid_argument("predicted_label_count: table too short");
  }
  const int x = label.x;
  switch (x - label.k) {
    case 0:
      return x == n ? BigInt(1) : table.value(Sequence::kAlpha, n - x - 1);
    case 1:
      return table.value(Sequence::kBeta, n - x);
    case 2:
      return table.value(Sequence::kGamma, n - x + 1);
    case 3:
      return table.value(Sequence::kDelta, n - x + 2);
    default:
      return table.value(Sequence::kEpsilon, n - x + 3);
  }
}

}  // namespace hexavoid
