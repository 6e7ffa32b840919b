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
#include "jwalk/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "jwalk/dense_oracle.hpp"
#include "jwalk/engine.hpp"
#include "jwalk/experiments.hpp"

namespace jwalk::cli {
namespace {

struct SmallGraph {
    int n;
    int k;
};

constexpr SmallGraph kOracleGraphs[] = {{4, 2}, {5, 1}, {5, 2}};
constexpr CoinKind kCoins[] = {CoinKind::Cg, CoinKind::Cgrov, CoinKind::Cl, CoinKind::Cskw};
constexpr std::size_t kOracleSteps = 50;

std::string graph_label(int n, int k) {
    return "J(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

void oracle_checks(VerifyReport &report) {
    for (const auto g : kOracleGraphs) {
        for (const auto coin : kCoins) {
            for (const std::size_t m : {std::size_t{1}, std::size_t{2}}) {
                const double l = is_lackadaisical(coin) ? 1.0 : 0.0;
                const auto r = oracle::compare_with_engine(g.n, g.k, coin, l, m, kOracleSteps);
                CheckResult check;
                check.group = "oracle";
                check.name = graph_label(g.n, g.k) + " coin=" + std::string(coin_name(coin)) +
                             " M=" + std::to_string(m);
                check.passed = r.max_amplitude_error < kOracleTolerance;
                std::ostringstream detail;
                detail << "max amplitude error " << r.max_amplitude_error << " over "
                       << kOracleSteps << " steps";
                check.detail = detail.str();
                check.data = {{"max_amplitude_error", r.max_amplitude_error},
                              {"max_probability_error", r.max_probability_error},
                              {"steps", kOracleSteps}};
                report.checks.push_back(std::move(check));
            }
        }
    }
}

void unitarity_checks(VerifyReport &report, std::uint64_t steps) {
    const GraphSpec spec(13, 3);
    for (const auto coin : kCoins) {
        const double l = coin == CoinKind::Cg ? 1.0 : coin == CoinKind::Cl ? 0.1 : 0.0;
        const std::uint64_t m = 3;
        const QuantumWalk walk(WalkConfig::with_prefix_targets(spec, coin, l, m, steps));
        StateVector state = walk.initial_state();
        const double p0 = walk.success_probability(state);
        const double expected_p0 =
            static_cast<double>(m) / static_cast<double>(spec.vertex_count());
        double drift = std::abs(state.norm_squared() - 1.0);
        for (std::uint64_t t = 0; t < steps; ++t) {
            walk.step(state);
            drift = std::max(drift, std::abs(state.norm_squared() - 1.0));
        }
        CheckResult check;
        check.group = "unitarity";
        check.name = graph_label(13, 3) + " coin=" + std::string(coin_name(coin)) + " M=3";
        check.passed = drift < kNormTolerance &&
                       std::abs(p0 - expected_p0) < kInitialProbabilityTolerance;
        std::ostringstream detail;
        detail << "norm drift " << drift << " over " << steps << " steps, p(0) error "
               << std::abs(p0 - expected_p0);
        check.detail = detail.str();
        check.data = {{"norm_drift", drift},
                      {"steps", steps},
                      {"p0", p0},
                      {"p0_expected", expected_p0}};
        report.checks.push_back(std::move(check));
    }
}

void grover_law_checks(VerifyReport &report) {
    for (const auto g : {SmallGraph{300, 1}, SmallGraph{25, 2}, SmallGraph{13, 3}}) {
        const GraphSpec spec(g.n, g.k);
        const double law = std::numbers::pi * std::sqrt(static_cast<double>(spec.vertex_count())) /
                           (2.0 * std::numbers::sqrt2);
        const auto trace = run_trace(WalkConfig::with_prefix_targets(
            spec, CoinKind::Cgrov, 0.0, 1, default_t_max(spec, 0.0)));
        CheckResult check;
        check.group = "grover_law";
        check.name = graph_label(g.n, g.k) + " coin=grov M=1";
        check.data = {{"law_step", law}};
        if (!trace.peak) {
            check.passed = false;
            check.detail = "no peak found";
        } else {
            const double step_error = std::abs(static_cast<double>(trace.peak->step) - law);
            check.passed = step_error <= 2.0 && trace.peak->probability >= 0.45 &&
                           trace.peak->probability <= 0.55;
            std::ostringstream detail;
            detail << "t_peak " << trace.peak->step << " (law " << law << "), p_peak "
                   << trace.peak->probability;
            check.detail = detail.str();
            check.data["t_peak"] = trace.peak->step;
            check.data["p_peak"] = trace.peak->probability;
        }
        report.checks.push_back(std::move(check));
    }
}

} // namespace

bool VerifyReport::passed() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

nlohmann::json VerifyReport::to_json() const {
    auto list = nlohmann::json::array();
    for (const auto &c : checks) {
        list.push_back({{"group", c.group},
                        {"name", c.name},
                        {"passed", c.passed},
                        {"detail", c.detail},
                        {"data", c.data}});
    }
    return {{"passed", passed()}, {"checks", std::move(list)}};
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    std::size_t failures = 0;
    for (const auto &c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.group << ": " << c.name << " - " << c.detail
            << '\n';
        failures += c.passed ? 0 : 1;
    }
    out << checks.size() - failures << "/" << checks.size() << " checks passed\n";
    return out.str();
}

VerifyReport run_verify(const VerifyOptions &options) {
    VerifyReport report;
    if (options.oracle) {
        oracle_checks(report);
    }
    if (options.unitarity) {
        unitarity_checks(report, options.steps);
    }
    if (options.grover_law) {
        grover_law_checks(report);
    }
    return report;
}

} // namespace jwalk::cli
