// Copyright 2026 The jwalk Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exception types shared by the jwalk libraries.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace jwalk {

/// Bad user-supplied input: graph parameters, subsets, flags.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A caller broke an API precondition (layout mismatch, self-loop arc
/// passed where only edges are allowed).
class ContractViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Integer result does not fit in the target width.
class OverflowError : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace jwalk
