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

#ifndef HEXAVOID_ERRORS_HPP_
#define HEXAVOID_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hexavoid {

// Malformed one-line notation (not a rearrangement of 1..n).
class InvalidPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by operations whose input must avoid [3,2,1].
class Contains321 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A node handed to the pruned tree that is not a family member.
class NotAMember : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int completed_levels)
      : std::runtime_error(what), completed_levels_(completed_levels) {}

  // Number of tree levels fully enumerated before the budget ran out.
  int completed_levels() const { return completed_levels_; }

 private:
  int completed_levels_;
};

class DegenerateSpectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hexavoid

#endif  // HEXAVOID_ERRORS_HPP_
