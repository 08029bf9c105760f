// Copyright 2025-2026 The hierarchy-lab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hlab {

using BigInt = boost::multiprecision::cpp_int;

/// Two operands live in different cyclotomic rings; the caller must lift
/// them to a common ring order first (gate-level operations do this
/// automatically).
class ring_mismatch_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix dimensions are incompatible for the requested operation.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounded-search or recursion guard was exceeded. Deliberately distinct
/// from a negative decision: "guard tripped" never means "not a member".
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hlab
