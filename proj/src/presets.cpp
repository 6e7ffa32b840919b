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
#include "jwalk/presets.hpp"

#include <memory>

#include "jwalk/error.hpp"
#include "jwalk/parallel.hpp"

namespace jwalk {
namespace {

const std::vector<std::uint64_t> kTargetCounts{1, 3, 6};

ScenarioPreset trace_panel(std::string name, std::string caption, GraphSpec spec, CoinKind coin,
                           double loop_weight) {
    ScenarioPreset p{std::move(name), std::move(caption), PresetKind::Trace, spec, coin,
                     loop_weight, kTargetCounts, std::nullopt, {}, {}, SweepMetric::PeakProbability};
    return p;
}

ScenarioPreset sweep_panel(std::string name, std::string caption, SweepMetric metric) {
    ScenarioPreset p{std::move(name), std::move(caption), PresetKind::Sweep, GraphSpec(10, 3),
                     CoinKind::Cg, 0.0, {1}, std::nullopt, {CoinKind::Cg, CoinKind::Cl},
                     geometric_grid(0.01, 100.0, 50), metric};
    return p;
}

std::vector<ScenarioPreset> build_panels() {
    std::vector<ScenarioPreset> out;
    out.push_back(sweep_panel("fig2a", "J(10,3) peak success probability vs self-loop weight",
                              SweepMetric::PeakProbability));
    out.push_back(sweep_panel("fig2b", "J(10,3) peak step vs self-loop weight",
                              SweepMetric::PeakStep));

    struct Panel {
        const char *suffix;
        CoinKind coin;
        double loop;
    };
    const GraphSpec complete(300, 1);
    for (const Panel &p : {Panel{"a", CoinKind::Cg, 10.0}, Panel{"b", CoinKind::Cgrov, 0.0},
                           Panel{"c", CoinKind::Cl, 1.0}, Panel{"d", CoinKind::Cskw, 0.0}}) {
        out.push_back(trace_panel(std::string("fig3") + p.suffix,
                                  "complete graph J(300,1), coin " +
                                      std::string(coin_name(p.coin)),
                                  complete, p.coin, p.loop));
    }
    const GraphSpec triangular(25, 2);
    for (const Panel &p : {Panel{"a", CoinKind::Cg, 1.0}, Panel{"b", CoinKind::Cgrov, 0.0},
                           Panel{"c", CoinKind::Cl, 0.1}, Panel{"d", CoinKind::Cskw, 0.0}}) {
        out.push_back(trace_panel(std::string("fig4") + p.suffix,
                                  "triangular graph J(25,2), coin " +
                                      std::string(coin_name(p.coin)),
                                  triangular, p.coin, p.loop));
    }
    const Panel columns[] = {{"1", CoinKind::Cg, 1.0},
                             {"2", CoinKind::Cgrov, 0.0},
                             {"3", CoinKind::Cl, 0.1},
                             {"4", CoinKind::Cskw, 0.0}};
    for (int row = 1; row <= 4; ++row) {
        const GraphSpec spec(13, row + 2);
        for (const Panel &p : columns) {
            out.push_back(trace_panel("fig5-row" + std::to_string(row) + "-col" + p.suffix,
                                      "J(13," + std::to_string(row + 2) + "), coin " +
                                          std::string(coin_name(p.coin)),
                                      spec, p.coin, p.loop));
        }
    }
    return out;
}

std::vector<ScenarioPreset> build_variants() {
    std::vector<ScenarioPreset> out;
    for (int row = 1; row <= 4; ++row) {
        out.push_back(trace_panel("fig5-row" + std::to_string(row) + "-col3-text",
                                  "J(13," + std::to_string(row + 2) + "), coin l with l = 1",
                                  GraphSpec(13, row + 2), CoinKind::Cl, 1.0));
    }
    return out;
}

} // namespace

std::span<const ScenarioPreset> panel_presets() {
    static const std::vector<ScenarioPreset> panels = build_panels();
    return panels;
}

std::span<const ScenarioPreset> variant_presets() {
    static const std::vector<ScenarioPreset> variants = build_variants();
    return variants;
}

const ScenarioPreset *find_preset(std::string_view name) {
    for (const auto list : {panel_presets(), variant_presets()}) {
        for (const auto &p : list) {
            if (p.name == name) {
                return &p;
            }
        }
    }
    return nullptr;
}

std::vector<ProbabilityTrace> run_scenario(const ScenarioPreset &preset,
                                           const PeakOptions &options) {
    if (preset.kind != PresetKind::Trace) {
        throw ContractViolation("run_scenario: preset " + preset.name + " is a sweep");
    }
    const auto table = std::make_shared<const ArcTable>(preset.spec);
    const std::uint64_t steps = preset.resolved_t_max();
    std::vector<std::optional<ProbabilityTrace>> slots(preset.target_counts.size());
    parallel_for_index(slots.size(), [&](std::size_t i) {
        const auto cfg = WalkConfig::with_prefix_targets(preset.spec, preset.coin,
                                                         preset.loop_weight,
                                                         preset.target_counts[i], steps);
        slots[i] = run_trace(cfg, options, table);
    });
    std::vector<ProbabilityTrace> out;
    out.reserve(slots.size());
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

std::vector<SweepResult> run_sweep_preset(const ScenarioPreset &preset,
                                          const PeakOptions &options) {
    if (preset.kind != PresetKind::Sweep) {
        throw ContractViolation("run_sweep_preset: preset " + preset.name + " is a trace panel");
    }
    std::vector<SweepResult> out;
    for (const auto coin : preset.sweep_coins) {
        for (const auto m : preset.target_counts) {
            out.push_back(sweep_loop_weight(preset.spec, coin, m, preset.grid, preset.t_max,
                                            options));
        }
    }
    return out;
}

} // namespace jwalk
