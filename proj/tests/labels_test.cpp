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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hexavoid/errors.hpp"
#include "hexavoid/labels.hpp"
#include "hexavoid/pattern_family.hpp"
#include "support/brute_force.hpp"

using hexavoid::Entry;
using hexavoid::FamilyName;
using hexavoid::Label;
using hexavoid::Permutation;

namespace {

std::vector<int> values(const std::vector<Entry>& entries) {
  std::vector<int> out;
  for (const Entry& e : entries) out.push_back(e.value);
  return out;
}

std::vector<brute::Perm> avoiders(int n) {
  std::vector<brute::Perm> out;
  for (auto& p : brute::all_permutations(n)) {
    if (brute::avoids_321(p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("decompose the 8x8 hexagon pattern") {
  const auto d = hexavoid::decompose(Permutation{4, 6, 7, 1, 8, 2, 3, 5});
  CHECK(values(d.b1) == std::vector<int>{1, 2, 3, 5});
  CHECK(values(d.b2) == std::vector<int>{4, 6, 7, 8});
  CHECK(d.m == 8);
  CHECK(d.l == 7);
  CHECK(d.k == 6);
  CHECK(d.m_position == 5);
  CHECK(d.b1.front() == Entry{4, 1});
}

TEST_CASE("decompose small cases") {
  const auto id = hexavoid::decompose(Permutation::identity(5));
  CHECK(id.b2.empty());
  CHECK(id.m == 0);
  CHECK(id.l == 0);
  CHECK(id.k == 0);
  CHECK(id.m_position == 0);

  const auto d = hexavoid::decompose(Permutation{2, 1});
  CHECK(values(d.b1) == std::vector<int>{1});
  CHECK(values(d.b2) == std::vector<int>{2});
  CHECK(d.m == 2);
  CHECK(d.l == 0);
  CHECK(d.k == 0);
}

TEST_CASE("decompose rejects bad input") {
  CHECK_THROWS_AS(hexavoid::decompose(Permutation{3, 2, 1}),
                  hexavoid::Contains321);
  CHECK_THROWS_AS(hexavoid::label_of(Permutation{1, 4, 3, 2}),
                  hexavoid::Contains321);
  CHECK_THROWS_AS(hexavoid::label_of(Permutation()),
                  hexavoid::InvalidPermutation);
}

TEST_CASE("label examples") {
  CHECK(hexavoid::label_of(Permutation{4, 6, 7, 1, 8, 2, 3, 5}) ==
        Label{3, 0, 0, 0});
  for (int n = 1; n <= 10; ++n) {
    CHECK(hexavoid::label_of(Permutation::identity(n)) == Label{n, n, n, n});
  }
  CHECK(hexavoid::label_of(Permutation{2, 1}) == Label{1, 1, 1, 0});
  CHECK(hexavoid::label_of(Permutation{2, 1, 3}) == Label{2, 2, 2, 1});
  CHECK(Label{2, 2, 2, 1}.to_string() == "(2,2,2,1)");
}

TEST_CASE("label key round trip") {
  const Label l{300, 20, 7, 0};
  CHECK(Label::from_key(l.key()) == l);
}

TEST_CASE("decomposition and label invariants on all 321-avoiders") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& p : avoiders(n)) {
      const Permutation w(p);
      const auto d = hexavoid::decompose(w);
      REQUIRE(d.b1.size() + d.b2.size() == static_cast<std::size_t>(n));
      REQUIRE(d.b1.back().position == n);
      for (std::size_t i = 1; i < d.b1.size(); ++i) {
        REQUIRE(d.b1[i - 1].value < d.b1[i].value);
      }
      for (std::size_t i = 1; i < d.b2.size(); ++i) {
        REQUIRE(d.b2[i - 1].value < d.b2[i].value);
      }
      for (const Entry& e : d.b2) REQUIRE(e.position <= d.m_position);
      if (d.b2.empty()) REQUIRE(d.m_position == 0);

      const Label label = hexavoid::label_of(w);
      REQUIRE(label.well_formed());
      REQUIRE(label.x <= n);
      for (int i = n - label.x + 1; i < n; ++i) REQUIRE(w[i - 1] < w[i]);
      const auto expected = brute::label(p);
      REQUIRE(label == Label{expected[0], expected[1], expected[2], expected[3]});
    }
  }
}

TEST_CASE("delete_k_elements") {
  const Permutation p1{4, 6, 7, 1, 8, 2, 3, 5};
  CHECK(hexavoid::delete_k_elements(p1) == p1);
  // [2,1,3] has label (2,2,2,1): the active values 1 and 3 both exceed
  // K = 0, so both are removed.
  CHECK(hexavoid::delete_k_elements(Permutation{2, 1, 3}) == Permutation{1});
  CHECK(hexavoid::delete_k_elements(Permutation::identity(4)).empty());

  for (int n = 1; n <= 9; ++n) {
    for (const auto& p : avoiders(n)) {
      const Permutation w(p);
      const Label label = hexavoid::label_of(w);
      // Remove every active value above K, found without the library.
      const auto lab = brute::label(p);
      std::vector<int> removed(p.end() - lab[1], p.end());
      const Permutation image = hexavoid::delete_k_elements(w);
      REQUIRE(image == Permutation(brute::remove_values(p, removed)));
      REQUIRE(image.size() == n - label.k);
      if (label.x > label.k) {
        REQUIRE(hexavoid::label_of(image) == Label{label.x - label.k, 0, 0, 0});
      } else if (!image.empty()) {
        REQUIRE(hexavoid::ends_in_max(image));
      }
    }
  }
}

TEST_CASE("deletion keeps HEX8 membership both ways") {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& p : avoiders(n)) {
      const Permutation w(p);
      const Permutation image = hexavoid::delete_k_elements(w);
      REQUIRE(hexavoid::is_member(w, FamilyName::kHex8) ==
              hexavoid::is_member(image, FamilyName::kHex8));
    }
  }
}

TEST_CASE("ends_in_max") {
  CHECK(hexavoid::ends_in_max(Permutation{2, 1, 3}));
  CHECK_FALSE(hexavoid::ends_in_max(Permutation{1, 3, 2}));
  CHECK_FALSE(hexavoid::ends_in_max(Permutation()));
}

TEST_CASE("label projection for the smaller families") {
  const Label l{5, 3, 2, 1};
  CHECK(hexavoid::project_label(l, FamilyName::kHex8) == l);
  CHECK(hexavoid::project_label(l, FamilyName::kHex6) == Label{5, 5, 2, 1});
  CHECK(hexavoid::project_label(l, FamilyName::kHex4) == Label{5, 5, 5, 1});
}
