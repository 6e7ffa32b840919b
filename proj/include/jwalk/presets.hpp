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
 * Named scenarios, one per published figure panel.
 *
 *   fig2a, fig2b           self-loop sweep on J(10,3), coins g and l, M = 1
 *   fig3a..fig3d           J(300,1): g l=10, grov, l l=1, skw
 *   fig4a..fig4d           J(25,2):  g l=1,  grov, l l=0.1, skw
 *   fig5-rowR-colC         J(13,R+2), columns g l=1, grov, l l=0.1, skw
 *
 * Trace panels run M in {1, 3, 6} with prefix targets. The Fig. 5 column-3
 * panels also have "-text" variants with l = 1.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jwalk/engine.hpp"
#include "jwalk/experiments.hpp"
#include "jwalk/graph.hpp"

namespace jwalk {

enum class PresetKind { Trace, Sweep };

/// Which peak field a sweep panel plots.
enum class SweepMetric { PeakProbability, PeakStep };

struct ScenarioPreset {
    std::string name;
    std::string caption;
    PresetKind kind{PresetKind::Trace};
    GraphSpec spec;
    CoinKind coin{CoinKind::Cg};
    double loop_weight{0.0};
    std::vector<std::uint64_t> target_counts;
    /// Falls back to default_t_max.
    std::optional<std::uint64_t> t_max;

    // Sweep panels.
    std::vector<CoinKind> sweep_coins;
    std::vector<double> grid;
    SweepMetric metric{SweepMetric::PeakProbability};

    [[nodiscard]] std::uint64_t resolved_t_max() const {
        return t_max.value_or(default_t_max(spec, loop_weight));
    }
};

/// The 26 figure panels, in figure order.
[[nodiscard]] std::span<const ScenarioPreset> panel_presets();
/// Alternative panels that are not part of the figure list.
[[nodiscard]] std::span<const ScenarioPreset> variant_presets();
/// Searches panels, then variants.
[[nodiscard]] const ScenarioPreset *find_preset(std::string_view name);

/// One trace per target count, in preset order. Trace presets only.
[[nodiscard]] std::vector<ProbabilityTrace> run_scenario(const ScenarioPreset &preset,
                                                         const PeakOptions &options = {});

/// One sweep per coin in preset.sweep_coins. Sweep presets only.
[[nodiscard]] std::vector<SweepResult> run_sweep_preset(const ScenarioPreset &preset,
                                                        const PeakOptions &options = {});

} // namespace jwalk
