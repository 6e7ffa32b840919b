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
#include "jwalk/experiments.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <algorithm>
#include <numbers>
#include <string>

#include "jwalk/error.hpp"
#include "jwalk/parallel.hpp"

namespace jwalk {

std::size_t thread_count() {
    const char *raw = std::getenv("JWALK_THREADS");
    if (raw == nullptr || *raw == '\0') {
        return std::max(1U, std::thread::hardware_concurrency());
    }
    char *end = nullptr;
    errno = 0;
    const long long value = std::strtoll(raw, &end, 10);
    if (errno != 0 || *end != '\0' || value < 1) {
        throw ValidationError(std::string("JWALK_THREADS must be a positive integer, got '") +
                              raw + "'");
    }
    return static_cast<std::size_t>(value);
}

std::string_view peak_rule_name(PeakRule rule) noexcept {
    return rule == PeakRule::FirstLocalMax ? "first" : "global";
}

std::optional<PeakRule> parse_peak_rule(std::string_view name) noexcept {
    if (name == "first") {
        return PeakRule::FirstLocalMax;
    }
    if (name == "global") {
        return PeakRule::GlobalMax;
    }
    return std::nullopt;
}

std::optional<Peak> find_peak(std::span<const double> trace, const PeakOptions &options) {
    if (trace.size() < 2) {
        throw ValidationError("find_peak needs a trace of length >= 2");
    }
    if (options.rule == PeakRule::GlobalMax) {
        std::size_t best = 0;
        for (std::size_t t = 1; t < trace.size(); ++t) {
            if (trace[t] > trace[best]) {
                best = t;
            }
        }
        return Peak{best, trace[best]};
    }
    if (options.window == 0) {
        throw ValidationError("peak window must be >= 1");
    }
    const std::size_t last = trace.size() - 1;
    const double threshold = trace[0] + options.floor;
    for (std::size_t t = 1; t < last; ++t) {
        const double p = trace[t];
        if (!(p > threshold)) {
            continue;
        }
        bool dominates = true;
        for (std::size_t s = t > options.window ? t - options.window : 0; s < t && dominates; ++s) {
            dominates = p > trace[s];
        }
        for (std::size_t s = t + 1; s <= std::min(last, t + options.window) && dominates; ++s) {
            dominates = p >= trace[s];
        }
        if (dominates) {
            return Peak{t, p};
        }
    }
    return std::nullopt;
}

std::uint64_t default_t_max(const GraphSpec &spec, double loop_weight) {
    const double size = static_cast<double>(spec.vertex_count()) *
                        (static_cast<double>(spec.degree()) + loop_weight);
    return 10 * static_cast<std::uint64_t>(std::ceil(std::numbers::pi * std::sqrt(size) / 2.0));
}

ProbabilityTrace run_trace(const WalkConfig &cfg, const PeakOptions &options,
                           std::shared_ptr<const ArcTable> table) {
    if (!table) {
        table = std::make_shared<const ArcTable>(cfg.spec);
    }
    const QuantumWalk walk(cfg, std::move(table));
    ProbabilityTrace out{cfg, options, walk.evolve_trace(), std::nullopt};
    out.peak = find_peak(out.p, options);
    return out;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t points) {
    if (points == 0 || !(lo > 0.0) || !std::isfinite(lo)) {
        throw ValidationError("geometric grid needs lo > 0 and at least one point");
    }
    if (points == 1) {
        return {lo};
    }
    if (!(hi > lo) || !std::isfinite(hi)) {
        throw ValidationError("geometric grid needs lo < hi");
    }
    std::vector<double> grid(points);
    const double ratio = std::log(hi / lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = lo * std::exp(ratio * static_cast<double>(i));
    }
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

SweepResult sweep_loop_weight(const GraphSpec &spec, CoinKind coin, std::uint64_t target_count,
                              std::span<const double> grid, std::optional<std::uint64_t> t_max,
                              const PeakOptions &options) {
    if (!is_lackadaisical(coin)) {
        throw ValidationError("self-loop sweeps need a lackadaisical coin (g or l), got " +
                              std::string(coin_name(coin)));
    }
    if (grid.empty()) {
        throw ValidationError("sweep grid is empty");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || grid[i] < 0.0 || (i > 0 && !(grid[i] > grid[i - 1]))) {
            throw ValidationError("sweep grid must be finite, >= 0 and strictly increasing");
        }
    }

    const auto table = std::make_shared<const ArcTable>(spec);
    SweepResult result{spec, coin, target_count, options, std::vector<SweepRecord>(grid.size())};
    parallel_for_index(grid.size(), [&](std::size_t i) {
        const std::uint64_t steps = t_max.value_or(default_t_max(spec, grid[i]));
        const auto cfg = WalkConfig::with_prefix_targets(spec, coin, grid[i], target_count, steps);
        result.records[i] = SweepRecord{grid[i], steps, run_trace(cfg, options, table).peak};
    });
    return result;
}

std::optional<Plateau> longest_plateau(std::span<const SweepRecord> records,
                                       double min_probability, double max_step_spread) {
    const auto qualifies = [&](const SweepRecord &r) {
        return r.peak && r.peak->probability > min_probability && r.peak->step > 0;
    };
    std::optional<Plateau> best;
    for (std::size_t first = 0; first < records.size(); ++first) {
        if (!qualifies(records[first])) {
            continue;
        }
        std::uint64_t lo = records[first].peak->step;
        std::uint64_t hi = lo;
        std::size_t end = first + 1;
        for (; end < records.size() && qualifies(records[end]); ++end) {
            const std::uint64_t step = records[end].peak->step;
            const std::uint64_t new_lo = std::min(lo, step);
            const std::uint64_t new_hi = std::max(hi, step);
            if (!(static_cast<double>(new_hi - new_lo) / static_cast<double>(new_lo) <
                  max_step_spread)) {
                break;
            }
            lo = new_lo;
            hi = new_hi;
        }
        if (!best || end - first > best->length) {
            best = Plateau{first, end - first};
        }
    }
    return best;
}

} // namespace jwalk
