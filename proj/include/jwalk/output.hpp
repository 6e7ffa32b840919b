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
 * CSV and JSON artifacts.
 *
 * Trace CSV: header `step,<col>...`, one column per run (`p_M<M>` for
 * prefix targets, `p_set<i>` for explicit sets), one row per step starting
 * at 0, reals as %.12g, LF line endings. The sidecar JSON next to it is a
 * flat object echoing every run parameter.
 */
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "jwalk/experiments.hpp"

namespace jwalk::cli {

/// %.12g
[[nodiscard]] std::string format_real(double value);

/// True when cfg.targets is exactly ranks 0..M-1.
[[nodiscard]] bool uses_prefix_targets(const WalkConfig &cfg);
[[nodiscard]] std::string trace_column_name(const ProbabilityTrace &trace, std::size_t index);

/// Traces must be nonempty and of equal length (ContractViolation).
void write_trace_csv(std::ostream &out, std::span<const ProbabilityTrace> traces);
[[nodiscard]] nlohmann::json trace_sidecar(std::span<const ProbabilityTrace> traces);

/// `csv` with its extension replaced by .json.
[[nodiscard]] std::filesystem::path sidecar_path(const std::filesystem::path &csv);

/// Writes the CSV and its sidecar. Throws IoError naming the path.
void emit_trace_csv(std::span<const ProbabilityTrace> traces, const std::filesystem::path &csv);

struct SweepColumns {
    bool probability{true};
    bool step{true};
};

/// Header `l,p_peak_<suffix>,t_peak_<suffix>,...`; a missing peak leaves
/// both cells empty. All results must share one grid.
void write_sweep_csv(std::ostream &out, std::span<const SweepResult> sweeps,
                     SweepColumns columns = {});
[[nodiscard]] nlohmann::json sweep_sidecar(std::span<const SweepResult> sweeps);
void emit_sweep_csv(std::span<const SweepResult> sweeps, const std::filesystem::path &csv,
                    SweepColumns columns = {});

struct CsvTable {
    std::vector<std::string> header;
    /// rows[r][c]; empty cells read as NaN.
    std::vector<std::vector<double>> rows;
};

/// Throws IoError when unreadable, ValidationError when malformed.
[[nodiscard]] CsvTable read_csv(const std::filesystem::path &path);
[[nodiscard]] CsvTable parse_csv(std::istream &in);

/// Writes `text` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path &path, const std::string &text);

} // namespace jwalk::cli
