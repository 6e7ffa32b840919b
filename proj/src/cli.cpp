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
#include "jwalk/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <memory>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "jwalk/output.hpp"
#include "jwalk/parallel.hpp"
#include "jwalk/presets.hpp"
#include "jwalk/verify.hpp"

namespace jwalk::cli {
namespace {

std::vector<std::string> split_commas(const std::string &text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) {
            return parts;
        }
        start = comma + 1;
    }
}

std::uint64_t parse_uint(const std::string &flag, const std::string &text) {
    std::uint64_t value = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw UsageError(flag, "expected a non-negative integer, got '" + text + "'");
    }
    return value;
}

double parse_real(const std::string &flag, const std::string &text) {
    double value = 0.0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw UsageError(flag, "expected a finite number, got '" + text + "'");
    }
    return value;
}

std::vector<std::uint64_t> parse_uint_list(const std::string &flag, const std::string &text) {
    std::vector<std::uint64_t> values;
    for (const auto &part : split_commas(text)) {
        values.push_back(parse_uint(flag, part));
    }
    return values;
}

GraphSpec parse_graph(const std::string &text) {
    const auto parts = split_commas(text);
    if (parts.size() != 2) {
        throw UsageError("--graph", "expected 'n,k', got '" + text + "'");
    }
    const auto n = parse_uint("--graph", parts[0]);
    const auto k = parse_uint("--graph", parts[1]);
    if (n > 10000 || k > 10000) {
        throw UsageError("--graph", "n and k must be <= 10000");
    }
    try {
        return GraphSpec(static_cast<int>(n), static_cast<int>(k));
    } catch (const ValidationError &e) {
        throw UsageError("--graph", e.what());
    } catch (const OverflowError &e) {
        throw UsageError("--graph", e.what());
    }
}

// Raw strings collected by CLI11, validated afterwards so that every
// failure carries the flag name.
struct RawWalkFlags {
    std::string graph;
    std::string coin;
    std::string loop;
    std::string targets;
    std::string target_set;
    std::string steps;
    std::string peak_rule{"first"};
    std::string peak_window{"2"};
    std::string output;
};

void add_peak_flags(CLI::App *cmd, RawWalkFlags &raw) {
    cmd->add_option("--peak-rule", raw.peak_rule, "first (first local maximum) or global")
        ->capture_default_str();
    cmd->add_option("--peak-window", raw.peak_window,
                    "neighbourhood half-width for the first-peak rule")
        ->capture_default_str();
}

void add_walk_flags(CLI::App *cmd, RawWalkFlags &raw) {
    cmd->add_option("--graph", raw.graph, "Johnson graph as n,k")->required();
    cmd->add_option("--coin", raw.coin, "g, grov, l or skw")->required();
    cmd->add_option("--targets", raw.targets, "target counts M, comma separated (prefix rule)");
    cmd->add_option("--steps", raw.steps, "step budget t_max");
    cmd->add_option("--out", raw.output, "CSV path; a .json sidecar is written beside it");
    add_peak_flags(cmd, raw);
}

PeakOptions parse_peak(const RawWalkFlags &raw) {
    PeakOptions peak;
    const auto rule = parse_peak_rule(raw.peak_rule);
    if (!rule) {
        throw UsageError("--peak-rule", "unknown rule '" + raw.peak_rule +
                                            "'; expected first or global");
    }
    peak.rule = *rule;
    peak.window = static_cast<std::size_t>(parse_uint("--peak-window", raw.peak_window));
    if (peak.window == 0) {
        throw UsageError("--peak-window", "must be >= 1");
    }
    return peak;
}

void parse_walk(const RawWalkFlags &raw, RunSpec &spec) {
    spec.graph = parse_graph(raw.graph);
    const auto coin = parse_coin(raw.coin);
    if (!coin) {
        throw UsageError("--coin", "unknown coin '" + raw.coin + "'; expected g, grov, l or skw");
    }
    spec.coin = *coin;
    if (!raw.steps.empty()) {
        spec.t_max = parse_uint("--steps", raw.steps);
        if (*spec.t_max < 1) {
            throw UsageError("--steps", "must be >= 1");
        }
    }
    const std::uint64_t vertices = spec.graph->vertex_count();
    if (!raw.targets.empty()) {
        spec.target_counts = parse_uint_list("--targets", raw.targets);
        for (const auto m : spec.target_counts) {
            if (m < 1) {
                throw UsageError("--targets", "target count must be >= 1");
            }
            if (m > vertices) {
                throw UsageError("--targets", "M = " + std::to_string(m) + " exceeds N = " +
                                                  std::to_string(vertices));
            }
        }
    }
    spec.peak = parse_peak(raw);
    spec.output = raw.output;
}

void parse_loop(const RawWalkFlags &raw, RunSpec &spec) {
    const bool lackadaisical = is_lackadaisical(spec.coin);
    if (raw.loop.empty()) {
        if (lackadaisical) {
            throw UsageError("--loop", "coin " + std::string(coin_name(spec.coin)) +
                                           " needs a self-loop weight > 0");
        }
        return;
    }
    if (!lackadaisical) {
        throw UsageError("--loop", "self-loop is incompatible with coin " +
                                       std::string(coin_name(spec.coin)));
    }
    const double l = parse_real("--loop", raw.loop);
    if (!(l > 0.0)) {
        throw UsageError("--loop", "self-loop weight must be > 0");
    }
    spec.loop_weight = l;
}

void finish_trace(const RawWalkFlags &raw, RunSpec &spec) {
    parse_walk(raw, spec);
    parse_loop(raw, spec);
    if (raw.targets.empty() == raw.target_set.empty()) {
        throw UsageError("--targets", "give exactly one of --targets M or --target-set r1,r2,...");
    }
    if (!raw.target_set.empty()) {
        const auto ranks = parse_uint_list("--target-set", raw.target_set);
        const std::set<std::uint64_t> unique(ranks.begin(), ranks.end());
        if (unique.size() != ranks.size()) {
            throw UsageError("--target-set", "duplicate vertex rank");
        }
        for (const auto r : unique) {
            if (r >= spec.graph->vertex_count()) {
                throw UsageError("--target-set", "rank " + std::to_string(r) + " outside [0, " +
                                                     std::to_string(spec.graph->vertex_count()) +
                                                     ")");
            }
        }
        spec.target_set.assign(unique.begin(), unique.end());
    }
}

struct RawSweepFlags {
    std::string grid_min{"0.01"};
    std::string grid_max{"100"};
    std::string grid_points{"50"};
};

void finish_sweep(const RawWalkFlags &raw, const RawSweepFlags &grid, RunSpec &spec) {
    parse_walk(raw, spec);
    if (!is_lackadaisical(spec.coin)) {
        throw UsageError("--coin", "sweeps vary the self-loop weight; coin must be g or l");
    }
    if (!raw.loop.empty()) {
        throw UsageError("--loop", "sweeps take --grid-min/--grid-max instead of --loop");
    }
    if (spec.target_counts.size() != 1) {
        throw UsageError("--targets", "sweeps need exactly one target count M");
    }
    spec.grid_min = parse_real("--grid-min", grid.grid_min);
    spec.grid_max = parse_real("--grid-max", grid.grid_max);
    spec.grid_points = static_cast<std::size_t>(parse_uint("--grid-points", grid.grid_points));
    if (!(spec.grid_min > 0.0)) {
        throw UsageError("--grid-min", "must be > 0");
    }
    if (spec.grid_points < 1) {
        throw UsageError("--grid-points", "must be >= 1");
    }
    if (spec.grid_points > 1 && !(spec.grid_max > spec.grid_min)) {
        throw UsageError("--grid-max", "must exceed --grid-min");
    }
}

} // namespace

RunSpec parse_args(std::span<const std::string> args) {
    CLI::App app{"Coined quantum walk search on Johnson graphs J(n,k)", "jwalk"};
    app.require_subcommand(1, 1);

    RawWalkFlags trace_raw;
    auto *trace = app.add_subcommand("trace", "success probability p(t) for one or more target counts");
    add_walk_flags(trace, trace_raw);
    trace->add_option("--loop", trace_raw.loop, "self-loop weight l (coins g and l)");
    trace->add_option("--target-set", trace_raw.target_set, "explicit target ranks, comma separated");

    RawWalkFlags sweep_raw;
    RawSweepFlags sweep_grid;
    auto *sweep = app.add_subcommand("sweep", "peak probability and step across self-loop weights");
    add_walk_flags(sweep, sweep_raw);
    sweep->add_option("--loop", sweep_raw.loop, "not accepted; see --grid-min/--grid-max");
    sweep->add_option("--grid-min", sweep_grid.grid_min, "smallest l")->capture_default_str();
    sweep->add_option("--grid-max", sweep_grid.grid_max, "largest l")->capture_default_str();
    sweep->add_option("--grid-points", sweep_grid.grid_points, "geometric grid size")
        ->capture_default_str();

    RunSpec spec;
    RawWalkFlags preset_raw;
    auto *preset = app.add_subcommand("preset", "reproduce a figure panel");
    preset->add_option("name", spec.preset_name, "panel name, e.g. fig3a or fig5-row2-col3");
    preset->add_flag("--list", spec.list_presets, "list figure panels");
    preset->add_flag("--list-variants", spec.list_variants, "list alternative panels");
    preset->add_flag("--all", spec.all_presets, "run every figure panel");
    preset->add_option("--out-dir", spec.output_dir, "directory for <name>.csv and <name>.json")
        ->capture_default_str();
    add_peak_flags(preset, preset_raw);

    std::string verify_steps{"1000"};
    auto *verify = app.add_subcommand("verify", "run the built-in correctness checks");
    verify->add_flag("--oracle", spec.verify_oracle, "dense-matrix equivalence on small graphs");
    verify->add_flag("--unitarity", spec.verify_unitarity, "norm drift and p(0) = M/N");
    verify->add_flag("--grover-law", spec.verify_grover_law, "Grover-coin single-target peak");
    verify->add_option("--steps", verify_steps, "steps for --unitarity")->capture_default_str();
    verify->add_option("--report", spec.report_path, "write the JSON report here");
    verify->add_flag("--json", spec.json_report, "print the JSON report instead of text");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        for (const auto *sub : app.get_subcommands()) {
            throw HelpRequested(sub->help());
        }
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp &) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError &e) {
        throw UsageError("", e.what());
    }

    if (trace->parsed()) {
        spec.command = Command::Trace;
        finish_trace(trace_raw, spec);
    } else if (sweep->parsed()) {
        spec.command = Command::Sweep;
        finish_sweep(sweep_raw, sweep_grid, spec);
    } else if (preset->parsed()) {
        spec.command = Command::Preset;
        spec.peak = parse_peak(preset_raw);
        const int modes = (spec.preset_name.empty() ? 0 : 1) + (spec.list_presets ? 1 : 0) +
                          (spec.list_variants ? 1 : 0) + (spec.all_presets ? 1 : 0);
        if (modes != 1) {
            throw UsageError("preset", "give exactly one of a panel name, --list, "
                                       "--list-variants or --all");
        }
        if (!spec.preset_name.empty() && find_preset(spec.preset_name) == nullptr) {
            throw UsageError("preset", "unknown panel '" + spec.preset_name +
                                           "'; see `jwalk preset --list`");
        }
    } else {
        spec.command = Command::Verify;
        spec.verify_steps = parse_uint("--steps", verify_steps);
        if (!spec.verify_oracle && !spec.verify_unitarity && !spec.verify_grover_law) {
            spec.verify_oracle = spec.verify_unitarity = spec.verify_grover_law = true;
        }
    }
    return spec;
}

namespace {

std::vector<ProbabilityTrace> run_trace_command(const RunSpec &spec) {
    const GraphSpec &graph = *spec.graph;
    const double l = spec.loop_weight.value_or(0.0);
    const std::uint64_t steps = spec.t_max.value_or(default_t_max(graph, l));
    std::vector<WalkConfig> configs;
    if (spec.target_set.empty()) {
        for (const auto m : spec.target_counts) {
            configs.push_back(WalkConfig::with_prefix_targets(graph, spec.coin, l, m, steps));
        }
    } else {
        WalkConfig cfg{graph, spec.coin, l, {}, steps};
        for (const auto r : spec.target_set) {
            cfg.targets.push_back(VertexId{r});
        }
        configs.push_back(std::move(cfg));
    }
    const auto table = std::make_shared<const ArcTable>(graph);
    std::vector<std::optional<ProbabilityTrace>> slots(configs.size());
    parallel_for_index(configs.size(),
                       [&](std::size_t i) { slots[i] = run_trace(configs[i], spec.peak, table); });
    std::vector<ProbabilityTrace> traces;
    for (auto &s : slots) {
        traces.push_back(std::move(*s));
    }
    return traces;
}

void report_peaks(std::span<const ProbabilityTrace> traces, std::ostream &out) {
    for (std::size_t i = 0; i < traces.size(); ++i) {
        out << "  " << trace_column_name(traces[i], i) << ": ";
        if (traces[i].peak) {
            out << "t_peak=" << traces[i].peak->step
                << " p_peak=" << format_real(traces[i].peak->probability) << '\n';
        } else {
            out << "no peak\n";
        }
    }
}

int run_preset(const ScenarioPreset &preset, const RunSpec &spec, std::ostream &out) {
    const std::filesystem::path dir(spec.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
    }
    const auto csv = dir / (preset.name + ".csv");
    if (preset.kind == PresetKind::Trace) {
        const auto traces = run_scenario(preset, spec.peak);
        emit_trace_csv(traces, csv);
        out << preset.name << " -> " << csv.string() << '\n';
        report_peaks(traces, out);
    } else {
        const auto sweeps = run_sweep_preset(preset, spec.peak);
        SweepColumns columns;
        columns.probability = preset.metric == SweepMetric::PeakProbability;
        columns.step = preset.metric == SweepMetric::PeakStep;
        emit_sweep_csv(sweeps, csv, columns);
        out << preset.name << " -> " << csv.string() << '\n';
    }
    return kExitOk;
}

int dispatch(const RunSpec &spec, std::ostream &out) {
    switch (spec.command) {
    case Command::Trace: {
        const auto traces = run_trace_command(spec);
        if (spec.output.empty()) {
            write_trace_csv(out, traces);
        } else {
            emit_trace_csv(traces, spec.output);
            out << "wrote " << spec.output << " and " << sidecar_path(spec.output).string()
                << '\n';
            report_peaks(traces, out);
        }
        return kExitOk;
    }
    case Command::Sweep: {
        const auto grid = geometric_grid(spec.grid_min, spec.grid_max, spec.grid_points);
        const std::vector<SweepResult> sweeps{sweep_loop_weight(
            *spec.graph, spec.coin, spec.target_counts.front(), grid, spec.t_max, spec.peak)};
        if (spec.output.empty()) {
            write_sweep_csv(out, sweeps);
        } else {
            emit_sweep_csv(sweeps, spec.output);
            out << "wrote " << spec.output << " and " << sidecar_path(spec.output).string()
                << '\n';
        }
        return kExitOk;
    }
    case Command::Preset: {
        if (spec.list_presets || spec.list_variants) {
            for (const auto &p : spec.list_presets ? panel_presets() : variant_presets()) {
                out << p.name << '\t' << p.caption << '\n';
            }
            return kExitOk;
        }
        if (spec.all_presets) {
            for (const auto &p : panel_presets()) {
                run_preset(p, spec, out);
            }
            return kExitOk;
        }
        return run_preset(*find_preset(spec.preset_name), spec, out);
    }
    case Command::Verify: {
        VerifyOptions options;
        options.oracle = spec.verify_oracle;
        options.unitarity = spec.verify_unitarity;
        options.grover_law = spec.verify_grover_law;
        options.steps = spec.verify_steps;
        const auto report = run_verify(options);
        if (!spec.report_path.empty()) {
            write_text_file(spec.report_path, report.to_json().dump(2) + "\n");
        }
        out << (spec.json_report ? report.to_json().dump(2) + "\n" : report.to_text());
        return report.passed() ? kExitOk : kExitVerification;
    }
    }
    return kExitValidation;
}

} // namespace

int run(const RunSpec &spec, std::ostream &out, std::ostream &err) {
    try {
        return dispatch(spec, out);
    } catch (const IoError &e) {
        err << "jwalk: I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ValidationError &e) {
        err << "jwalk: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception &e) {
        err << "jwalk: internal error: " << e.what() << '\n';
        return kExitValidation;
    }
}

int main_entry(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    RunSpec spec;
    try {
        spec = parse_args(args);
    } catch (const HelpRequested &help) {
        out << help.what();
        return kExitOk;
    } catch (const ValidationError &e) {
        err << "jwalk: " << e.what() << '\n';
        return kExitValidation;
    }
    return run(spec, out, err);
}

} // namespace jwalk::cli
