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
#include "jwalk/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "jwalk/error.hpp"

namespace jwalk::cli {

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

bool uses_prefix_targets(const WalkConfig &cfg) {
    for (std::size_t i = 0; i < cfg.targets.size(); ++i) {
        if (cfg.targets[i].rank != i) {
            return false;
        }
    }
    return true;
}

std::string trace_column_name(const ProbabilityTrace &trace, std::size_t index) {
    if (uses_prefix_targets(trace.config)) {
        return "p_M" + std::to_string(trace.config.targets.size());
    }
    return "p_set" + std::to_string(index);
}

namespace {

void check_traces(std::span<const ProbabilityTrace> traces) {
    if (traces.empty()) {
        throw ContractViolation("no traces to write");
    }
    for (const auto &t : traces) {
        if (t.p.size() != traces.front().p.size()) {
            throw ContractViolation("traces differ in length");
        }
    }
}

nlohmann::json peak_step(const std::optional<Peak> &peak) {
    return peak ? nlohmann::json(peak->step) : nlohmann::json(nullptr);
}

nlohmann::json peak_probability(const std::optional<Peak> &peak) {
    return peak ? nlohmann::json(peak->probability) : nlohmann::json(nullptr);
}

nlohmann::json graph_fields(const GraphSpec &spec) {
    return {{"graph_n", spec.n()},
            {"graph_k", spec.k()},
            {"N", spec.vertex_count()},
            {"d", spec.degree()}};
}

template <class Emit> void write_to_file(const std::filesystem::path &path, Emit &&emit) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    emit(out);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

} // namespace

void write_trace_csv(std::ostream &out, std::span<const ProbabilityTrace> traces) {
    check_traces(traces);
    out << "step";
    for (std::size_t i = 0; i < traces.size(); ++i) {
        out << ',' << trace_column_name(traces[i], i);
    }
    out << '\n';
    for (std::size_t t = 0; t < traces.front().p.size(); ++t) {
        out << t;
        for (const auto &trace : traces) {
            out << ',' << format_real(trace.p[t]);
        }
        out << '\n';
    }
}

nlohmann::json trace_sidecar(std::span<const ProbabilityTrace> traces) {
    check_traces(traces);
    const WalkConfig &first = traces.front().config;
    nlohmann::json doc = graph_fields(first.spec);
    auto targets = nlohmann::json::array();
    auto t_peak = nlohmann::json::array();
    auto p_peak = nlohmann::json::array();
    for (const auto &trace : traces) {
        if (uses_prefix_targets(trace.config)) {
            targets.push_back(trace.config.targets.size());
        } else {
            auto ranks = nlohmann::json::array();
            for (const auto v : trace.config.targets) {
                ranks.push_back(v.rank);
            }
            targets.push_back(std::move(ranks));
        }
        t_peak.push_back(peak_step(trace.peak));
        p_peak.push_back(peak_probability(trace.peak));
    }
    doc["coin"] = std::string(coin_name(first.coin));
    doc["l"] = first.loop_weight;
    doc["targets"] = std::move(targets);
    doc["t_max"] = first.t_max;
    doc["peak_rule"] = std::string(peak_rule_name(traces.front().peak_options.rule));
    doc["peak_window"] = traces.front().peak_options.window;
    doc["t_peak"] = std::move(t_peak);
    doc["p_peak"] = std::move(p_peak);
    return doc;
}

std::filesystem::path sidecar_path(const std::filesystem::path &csv) {
    auto out = csv;
    out.replace_extension(".json");
    return out;
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    write_to_file(path, [&](std::ostream &out) { out << text; });
}

void emit_trace_csv(std::span<const ProbabilityTrace> traces, const std::filesystem::path &csv) {
    check_traces(traces);
    write_to_file(csv, [&](std::ostream &out) { write_trace_csv(out, traces); });
    write_text_file(sidecar_path(csv), trace_sidecar(traces).dump(2) + "\n");
}

namespace {

std::string sweep_suffix(std::span<const SweepResult> sweeps, const SweepResult &s) {
    bool mixed_counts = false;
    for (const auto &other : sweeps) {
        mixed_counts |= other.target_count != sweeps.front().target_count;
    }
    std::string suffix(coin_name(s.coin));
    if (mixed_counts) {
        suffix += "_M" + std::to_string(s.target_count);
    }
    return suffix;
}

void check_sweeps(std::span<const SweepResult> sweeps) {
    if (sweeps.empty()) {
        throw ContractViolation("no sweeps to write");
    }
    for (const auto &s : sweeps) {
        if (s.records.size() != sweeps.front().records.size()) {
            throw ContractViolation("sweeps use different grids");
        }
        for (std::size_t i = 0; i < s.records.size(); ++i) {
            if (s.records[i].loop_weight != sweeps.front().records[i].loop_weight) {
                throw ContractViolation("sweeps use different grids");
            }
        }
    }
}

} // namespace

void write_sweep_csv(std::ostream &out, std::span<const SweepResult> sweeps,
                     SweepColumns columns) {
    check_sweeps(sweeps);
    out << 'l';
    for (const auto &s : sweeps) {
        const auto suffix = sweep_suffix(sweeps, s);
        if (columns.probability) {
            out << ",p_peak_" << suffix;
        }
        if (columns.step) {
            out << ",t_peak_" << suffix;
        }
    }
    out << '\n';
    for (std::size_t i = 0; i < sweeps.front().records.size(); ++i) {
        out << format_real(sweeps.front().records[i].loop_weight);
        for (const auto &s : sweeps) {
            const auto &peak = s.records[i].peak;
            if (columns.probability) {
                out << ',' << (peak ? format_real(peak->probability) : "");
            }
            if (columns.step) {
                out << ',' << (peak ? std::to_string(peak->step) : "");
            }
        }
        out << '\n';
    }
}

nlohmann::json sweep_sidecar(std::span<const SweepResult> sweeps) {
    check_sweeps(sweeps);
    nlohmann::json doc = graph_fields(sweeps.front().spec);
    auto coins = nlohmann::json::array();
    auto targets = nlohmann::json::array();
    auto t_peak = nlohmann::json::array();
    auto p_peak = nlohmann::json::array();
    auto grid = nlohmann::json::array();
    auto t_max = nlohmann::json::array();
    for (const auto &r : sweeps.front().records) {
        grid.push_back(r.loop_weight);
        t_max.push_back(r.t_max);
    }
    for (const auto &s : sweeps) {
        coins.push_back(std::string(coin_name(s.coin)));
        targets.push_back(s.target_count);
        auto steps = nlohmann::json::array();
        auto probs = nlohmann::json::array();
        for (const auto &r : s.records) {
            steps.push_back(peak_step(r.peak));
            probs.push_back(peak_probability(r.peak));
        }
        t_peak.push_back(std::move(steps));
        p_peak.push_back(std::move(probs));
    }
    doc["coin"] = std::move(coins);
    doc["l"] = std::move(grid);
    doc["targets"] = std::move(targets);
    doc["t_max"] = std::move(t_max);
    doc["peak_rule"] = std::string(peak_rule_name(sweeps.front().peak_options.rule));
    doc["peak_window"] = sweeps.front().peak_options.window;
    doc["t_peak"] = std::move(t_peak);
    doc["p_peak"] = std::move(p_peak);
    return doc;
}

void emit_sweep_csv(std::span<const SweepResult> sweeps, const std::filesystem::path &csv,
                    SweepColumns columns) {
    check_sweeps(sweeps);
    write_to_file(csv, [&](std::ostream &out) { write_sweep_csv(out, sweeps, columns); });
    write_text_file(sidecar_path(csv), sweep_sidecar(sweeps).dump(2) + "\n");
}

CsvTable parse_csv(std::istream &in) {
    CsvTable table;
    std::string line;
    auto split = [](const std::string &text) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream stream(text);
        while (std::getline(stream, cell, ',')) {
            cells.push_back(cell);
        }
        if (!text.empty() && text.back() == ',') {
            cells.emplace_back();
        }
        return cells;
    };
    if (!std::getline(in, line)) {
        throw ValidationError("CSV has no header");
    }
    table.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto cells = split(line);
        if (cells.size() != table.header.size()) {
            throw ValidationError("CSV row has " + std::to_string(cells.size()) +
                                  " cells, header has " + std::to_string(table.header.size()));
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto &c : cells) {
            if (c.empty()) {
                row.push_back(std::numeric_limits<double>::quiet_NaN());
                continue;
            }
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(c, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != c.size()) {
                throw ValidationError("CSV cell '" + c + "' is not a number");
            }
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable read_csv(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    return parse_csv(in);
}

} // namespace jwalk::cli
