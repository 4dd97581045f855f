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

#ifndef HEXAVOID_PATTERN_FAMILY_HPP_
#define HEXAVOID_PATTERN_FAMILY_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hexavoid/permutation.hpp"

namespace hexavoid {

enum class FamilyName { kHex8, kHex6, kHex4 };

inline constexpr std::array<FamilyName, 3> kAllFamilies = {
    FamilyName::kHex8, FamilyName::kHex6, FamilyName::kHex4};

// The forbidden octagonal-type patterns of one case. [3,2,1] is imposed on
// top of `patterns` and is not listed there.
struct PatternFamily {
  FamilyName name;
  std::vector<Permutation> patterns;
};

const PatternFamily& family(FamilyName name);

std::string_view family_id(FamilyName name);  // "hex8", "hex6", "hex4"
std::optional<FamilyName> parse_family(std::string_view id);

// Avoids [3,2,1] and every pattern of the family.
bool is_member(const Permutation& w, const PatternFamily& fam);
inline bool is_member(const Permutation& w, FamilyName name) {
  return is_member(w, family(name));
}

}  // namespace hexavoid

#endif  // HEXAVOID_PATTERN_FAMILY_HPP_
