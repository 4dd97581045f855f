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

#include "hexavoid/pattern_family.hpp"

namespace hexavoid {

namespace {

PatternFamily make(FamilyName name, std::initializer_list<const char*> ps) {
  PatternFamily fam{name, {}};
  for (const char* p : ps) fam.patterns.push_back(Permutation::parse(p));
  return fam;
}

}  // namespace

const PatternFamily& family(FamilyName name) {
  static const PatternFamily hex8 = make(
      FamilyName::kHex8, {"46718235", "46781235", "56718234", "56781234"});
  static const PatternFamily hex6 =
      make(FamilyName::kHex6, {"351624", "356124", "451623", "456123"});
  static const PatternFamily hex4 =
      make(FamilyName::kHex4, {"2143", "3142", "2413", "3412"});
  switch (name) {
    case FamilyName::kHex8:
      return hex8;
    case FamilyName::kHex6:
      return hex6;
    case FamilyName::kHex4:
      return hex4;
  }
  return hex8;
}

std::string_view family_id(FamilyName name) {
  switch (name) {
    case FamilyName::kHex8:
      return "hex8";
    case FamilyName::kHex6:
      return "hex6";
    case FamilyName::kHex4:
      return "hex4";
  }
  return "?";
}

std::optional<FamilyName> parse_family(std::string_view id) {
  for (FamilyName name : kAllFamilies) {
    if (family_id(name) == id) return name;
  }
  return std::nullopt;
}

bool is_member(const Permutation& w, const PatternFamily& fam) {
  if (!avoids_321(w)) return false;
  for (const Permutation& p : fam.patterns) {
    if (contains(w, p)) return false;
  }
  return true;
}

}  // namespace hexavoid
