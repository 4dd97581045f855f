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

#ifndef HEXAVOID_BIGINT_HPP_
#define HEXAVOID_BIGINT_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hexavoid {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace hexavoid

#endif  // HEXAVOID_BIGINT_HPP_
