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
 * Command-line surface: argument parsing into a validated RunSpec and the
 * command dispatcher used by the jwalk executable.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jwalk/engine.hpp"
#include "jwalk/error.hpp"
#include "jwalk/experiments.hpp"
#include "jwalk/graph.hpp"

namespace jwalk::cli {

enum class Command { Trace, Sweep, Preset, Verify };

/// Process exit statuses.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitVerification = 2,
    kExitIo = 3,
};

/// Bad command line. The message names the offending flag.
class UsageError : public ValidationError {
  public:
    UsageError(const std::string &flag, const std::string &message)
        : ValidationError(flag.empty() ? message : flag + ": " + message), flag_(flag) {}

    [[nodiscard]] const std::string &flag() const noexcept { return flag_; }

  private:
    std::string flag_;
};

/// Thrown by parse_args for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RunSpec {
    Command command{Command::Trace};

    // trace / sweep
    std::optional<GraphSpec> graph;
    CoinKind coin{CoinKind::Cgrov};
    /// Set only when --loop was given.
    std::optional<double> loop_weight;
    /// --targets: one run per M, targets = ranks 0..M-1.
    std::vector<std::uint64_t> target_counts;
    /// --target-set: one run with these ranks (sorted, unique).
    std::vector<std::uint64_t> target_set;
    std::optional<std::uint64_t> t_max;
    PeakOptions peak;
    /// CSV path; empty means stdout with no sidecar.
    std::string output;

    // sweep
    double grid_min{0.01};
    double grid_max{100.0};
    std::size_t grid_points{50};

    // preset
    std::string preset_name;
    bool list_presets{false};
    bool list_variants{false};
    bool all_presets{false};
    std::string output_dir{"."};

    // verify
    bool verify_oracle{false};
    bool verify_unitarity{false};
    bool verify_grover_law{false};
    std::uint64_t verify_steps{1000};
    std::string report_path;
    bool json_report{false};
};

/// `args` excludes the program name. Throws UsageError or HelpRequested.
[[nodiscard]] RunSpec parse_args(std::span<const std::string> args);

/// Executes one command, writing results to files or `out` and diagnostics
/// to `err`. Returns an ExitCode; never throws.
int run(const RunSpec &spec, std::ostream &out, std::ostream &err);

/// parse_args + run with the error-to-exit-code mapping.
int main_entry(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace jwalk::cli
