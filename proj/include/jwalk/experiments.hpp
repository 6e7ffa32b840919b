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
 * Probability traces, peak detection and self-loop weight sweeps.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "jwalk/engine.hpp"
#include "jwalk/graph.hpp"

namespace jwalk {

enum class PeakRule {
    /// First step that dominates its +/-window neighbourhood and clears
    /// p(0) + floor.
    FirstLocalMax,
    /// argmax over the whole trace, earliest step on ties.
    GlobalMax,
};

[[nodiscard]] std::string_view peak_rule_name(PeakRule rule) noexcept;
[[nodiscard]] std::optional<PeakRule> parse_peak_rule(std::string_view name) noexcept;

struct PeakOptions {
    PeakRule rule{PeakRule::FirstLocalMax};
    /// Half-width of the neighbourhood for FirstLocalMax. Flip-flop walks
    /// oscillate with period 2, so a width of 1 reports that ripple as a
    /// peak; 2 compares each step with both parities on either side.
    std::size_t window{2};
    /// Minimum rise over p(0) for FirstLocalMax.
    double floor{0.01};
};

struct Peak {
    std::uint64_t step{0};
    double probability{0.0};

    friend bool operator==(const Peak &, const Peak &) = default;
};

/**
 * FirstLocalMax: smallest t in [1, T) with p(t) > p(s) for the `window`
 * steps before t, p(t) >= p(s) for the `window` steps after t (clipped to
 * the trace), and p(t) > p(0) + floor. Returns nullopt when no step
 * qualifies, e.g. for a monotone trace.
 *
 * GlobalMax: argmax over [0, T]; never empty.
 *
 * Throws ValidationError for traces shorter than 2 or window == 0.
 */
[[nodiscard]] std::optional<Peak> find_peak(std::span<const double> trace,
                                            const PeakOptions &options = {});

struct ProbabilityTrace {
    WalkConfig config;
    PeakOptions peak_options;
    /// p(t) for t = 0..t_max.
    std::vector<double> p;
    std::optional<Peak> peak;
};

/// 10 * ceil(pi * sqrt(N (d + l)) / 2).
[[nodiscard]] std::uint64_t default_t_max(const GraphSpec &spec, double loop_weight);

/// Evolves `cfg` and locates its peak. `table` may be shared across runs on
/// the same graph; one is built when null.
[[nodiscard]] ProbabilityTrace run_trace(const WalkConfig &cfg, const PeakOptions &options = {},
                                         std::shared_ptr<const ArcTable> table = nullptr);

struct SweepRecord {
    double loop_weight{0.0};
    std::uint64_t t_max{0};
    /// Empty when the trace has no peak under the chosen rule.
    std::optional<Peak> peak;
};

struct SweepResult {
    GraphSpec spec;
    CoinKind coin{CoinKind::Cg};
    std::uint64_t target_count{1};
    PeakOptions peak_options;
    std::vector<SweepRecord> records;
};

/// `points` values from lo to hi inclusive, equally spaced in log l.
[[nodiscard]] std::vector<double> geometric_grid(double lo, double hi, std::size_t points);

/**
 * One run_trace per grid value with prefix targets 0..target_count-1.
 * t_max defaults to default_t_max(spec, l) per grid point. Only Cg and Cl
 * are accepted; the grid must be nonempty, positive and strictly increasing.
 */
[[nodiscard]] SweepResult sweep_loop_weight(const GraphSpec &spec, CoinKind coin,
                                            std::uint64_t target_count,
                                            std::span<const double> grid,
                                            std::optional<std::uint64_t> t_max = std::nullopt,
                                            const PeakOptions &options = {});

struct Plateau {
    /// Index of the first record in the run.
    std::size_t first{0};
    std::size_t length{0};

    friend bool operator==(const Plateau &, const Plateau &) = default;
};

/**
 * Longest run of consecutive sweep records whose peaks all exceed
 * `min_probability` and whose peak steps satisfy
 * (max - min) / min < `max_step_spread`. Earliest run wins ties; nullopt
 * when no single record qualifies.
 */
[[nodiscard]] std::optional<Plateau> longest_plateau(std::span<const SweepRecord> records,
                                                     double min_probability,
                                                     double max_step_spread);

} // namespace jwalk
