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
 * Self-checks run by `jwalk verify`.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace jwalk::cli {

struct VerifyOptions {
    /// Dense-matrix equivalence on J(4,2), J(5,1), J(5,2).
    bool oracle{true};
    /// Norm drift and p(0) = M/N on every coin.
    bool unitarity{true};
    /// Grover-coin single-target peak on J(300,1), J(25,2), J(13,3).
    bool grover_law{true};
    std::uint64_t steps{1000};
};

struct CheckResult {
    std::string group;
    std::string name;
    bool passed{false};
    std::string detail;
    nlohmann::json data;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] nlohmann::json to_json() const;
    [[nodiscard]] std::string to_text() const;
};

inline constexpr double kOracleTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kInitialProbabilityTolerance = 1e-12;

[[nodiscard]] VerifyReport run_verify(const VerifyOptions &options);

} // namespace jwalk::cli
