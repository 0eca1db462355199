// Copyright 2026 The supercheq-sim authors
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

#ifndef SUPERCHEQ_ERRORS_HPP
#define SUPERCHEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace supercheq {

/// Invalid user-supplied configuration or arguments (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Request exceeds a hard capacity limit, e.g. dense simulation of too many
/// qubits (CLI exit code 3).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal invariant violation: a bug, not a user error (CLI exit code 4).
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw ConfigError(message);
}

inline void require_capacity(bool condition, const std::string& message) {
    if (!condition) throw CapacityError(message);
}

inline void check_invariant(bool condition, const std::string& message) {
    if (!condition) throw InvariantError(message);
}

}  // namespace supercheq

#endif  // SUPERCHEQ_ERRORS_HPP
