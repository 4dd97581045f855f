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

#include "hexavoid/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "hexavoid/errors.hpp"

namespace hexavoid {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw InvalidPermutation("not a permutation of 1.." + std::to_string(n) +
                               ": " + to_string());
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values), Unchecked{});
}

Permutation Permutation::standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> ranked(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]]) {
      throw InvalidPermutation("standardize: repeated value " +
                               std::to_string(values[order[r]]));
    }
    ranked[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranked), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::string body;
  for (char c : text) {
    if (c != '[' && c != ']' && c != '(' && c != ')' &&
        !std::isspace(static_cast<unsigned char>(c))) {
      body.push_back(c);
    }
  }
  std::vector<int> values;
  if (body.find(',') == std::string::npos) {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InvalidPermutation("bad character in permutation: " +
                                 std::string(text));
      }
      values.push_back(c - '0');
    }
  } else {
    std::stringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() ||
          !std::all_of(item.begin(), item.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        throw InvalidPermutation("bad entry in permutation: " +
                                 std::string(text));
      }
      values.push_back(std::stoi(item));
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::insert_max(int right) const {
  std::vector<int> out;
  out.reserve(values_.size() + 1);
  const int cut = size() - right;
  out.insert(out.end(), values_.begin(), values_.begin() + cut);
  out.push_back(size() + 1);
  out.insert(out.end(), values_.begin() + cut, values_.end());
  return Permutation(std::move(out), Unchecked{});
}

Permutation Permutation::remove_max() const {
  std::vector<int> out;
  out.reserve(values_.size());
  for (int v : values_) {
    if (v != size()) out.push_back(v);
  }
  return Permutation(std::move(out), Unchecked{});
}

int Permutation::position_of_max() const {
  for (int i = 0; i < size(); ++i) {
    if (values_[i] == size()) return i;
  }
  return -1;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values_[i]);
  }
  out += ']';
  return out;
}

namespace {

// Backtracking matcher. Pattern entries are placed left to right; entry i
// only has to respect its nearest already-placed neighbours in value
// (below[i], above[i]), which bounds the admissible host values to a window.
class Matcher {
 public:
  Matcher(std::span<const int> host, std::span<const int> pattern)
      : host_(host), pattern_(pattern), below_(pattern.size(), -1),
        above_(pattern.size(), -1), chosen_(pattern.size(), -1) {
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (pattern[j] < pattern[i] &&
            (below_[i] < 0 || pattern[j] > pattern[below_[i]])) {
          below_[i] = static_cast<int>(j);
        }
        if (pattern[j] > pattern[i] &&
            (above_[i] < 0 || pattern[j] < pattern[above_[i]])) {
          above_[i] = static_cast<int>(j);
        }
      }
    }
  }

  bool search(int anchor_host, int anchor_pattern) {
    anchor_host_ = anchor_host;
    anchor_pattern_ = anchor_pattern;
    return place(0, 0);
  }

 private:
  bool fits(std::size_t i, int h) const {
    const int v = host_[h];
    if (below_[i] >= 0 && v < host_[chosen_[below_[i]]]) return false;
    if (above_[i] >= 0 && v > host_[chosen_[above_[i]]]) return false;
    return true;
  }

  bool place(std::size_t i, int first) {
    const int k = static_cast<int>(pattern_.size());
    if (static_cast<int>(i) == k) return true;
    const int n = static_cast<int>(host_.size());
    int last = n - (k - static_cast<int>(i));
    if (anchor_pattern_ >= 0) {
      const int a = anchor_pattern_;
      if (static_cast<int>(i) == a) {
        if (anchor_host_ < first || anchor_host_ > last ||
            !fits(i, anchor_host_)) {
          return false;
        }
        chosen_[i] = anchor_host_;
        return place(i + 1, anchor_host_ + 1);
      }
      if (static_cast<int>(i) < a) {
        last = std::min(last, anchor_host_ - (a - static_cast<int>(i)));
      }
    }
    for (int h = first; h <= last; ++h) {
      if (!fits(i, h)) continue;
      chosen_[i] = h;
      if (place(i + 1, h + 1)) return true;
    }
    return false;
  }

  std::span<const int> host_;
  std::span<const int> pattern_;
  std::vector<int> below_;
  std::vector<int> above_;
  std::vector<int> chosen_;
  int anchor_host_ = -1;
  int anchor_pattern_ = -1;
};

}  // namespace

bool contains(const Permutation& host, const Permutation& pattern) {
  if (pattern.size() > host.size()) return false;
  return Matcher(host.values(), pattern.values()).search(-1, -1);
}

bool contains_anchored(const Permutation& host, const Permutation& pattern,
                       int host_position, int pattern_index) {
  if (pattern.size() > host.size()) return false;
  if (host_position < 0 || host_position >= host.size() || pattern_index < 0 ||
      pattern_index >= pattern.size()) {
    return false;
  }
  return Matcher(host.values(), pattern.values())
      .search(host_position, pattern_index);
}

bool avoids_321(const Permutation& w) {
  const int n = w.size();
  int suffix_min = n + 1;
  int previous_other = n + 1;  // last non-minimum seen, scanning leftwards
  for (int i = n - 1; i >= 0; --i) {
    if (w[i] < suffix_min) {
      suffix_min = w[i];
    } else {
      if (w[i] > previous_other) return false;
      previous_other = w[i];
    }
  }
  return true;
}

}  // namespace hexavoid
