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

#include "hexavoid/label_dp.hpp"

#include <stdexcept>
#include <unordered_map>

namespace hexavoid {

BigInt LabelDistribution::total() const {
  BigInt sum = 0;
  for (const auto& [label, count] : counts) sum += count;
  return sum;
}

LabelDistribution root_distribution() {
  LabelDistribution d;
  d.n = 1;
  d.counts.emplace(Label{1, 1, 1, 1}, BigInt(1));
  return d;
}

LabelDistribution advance(const LabelDistribution& dist,
                          const SuccessionRule& rule) {
  std::unordered_map<std::uint64_t, BigInt> next;
  next.reserve(dist.counts.size() * 2);
  for (const auto& [label, count] : dist.counts) {
    for (const Label& child : rule.children(label)) {
      next[child.key()] += count;
    }
  }
  LabelDistribution out;
  out.n = dist.n + 1;
  for (auto& [key, count] : next) {
    out.counts.emplace(Label::from_key(key), std::move(count));
  }
  return out;
}

LabelDistribution distribution_at(int n, FamilyName family) {
  if (n < 1) throw std::invalid_argument("distribution_at: n must be >= 1");
  const SuccessionRule rule(family);
  LabelDistribution d = root_distribution();
  while (d.n < n) d = advance(d, rule);
  return d;
}

std::vector<BigInt> totals_through(int n_max, FamilyName family) {
  if (n_max < 1) throw std::invalid_argument("totals_through: n_max must be >= 1");
  const SuccessionRule rule(family);
  std::vector<BigInt> totals;
  LabelDistribution d = root_distribution();
  totals.push_back(d.total());
  while (d.n < n_max) {
    d = advance(d, rule);
    totals.push_back(d.total());
  }
  return totals;
}

}  // namespace hexavoid
