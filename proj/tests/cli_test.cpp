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
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "jwalk/cli.hpp"
#include "jwalk/output.hpp"
#include "jwalk/verify.hpp"

namespace jwalk::cli {
namespace {

namespace fs = std::filesystem;

RunSpec parse(std::initializer_list<std::string> args) {
    const std::vector<std::string> v(args);
    return parse_args(v);
}

std::string usage_message(std::initializer_list<std::string> args) {
    try {
        (void)parse(args);
    } catch (const UsageError &e) {
        return e.what();
    } catch (const ValidationError &e) {
        return std::string("validation: ") + e.what();
    }
    return "<no error>";
}

struct RunOutput {
    int code;
    std::string out;
    std::string err;
};

RunOutput invoke(std::initializer_list<std::string> args) {
    const std::vector<std::string> v(args);
    std::ostringstream out;
    std::ostringstream err;
    const int code = main_entry(v, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("jwalk-cli-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;
    [[nodiscard]] const fs::path &path() const { return path_; }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

TEST(ParseArgs, TraceWithLoop) {
    const auto spec = parse({"trace", "--graph", "13,3", "--coin", "g", "--loop", "1.0",
                             "--targets", "3", "--steps", "400"});
    EXPECT_EQ(spec.command, Command::Trace);
    ASSERT_TRUE(spec.graph);
    EXPECT_EQ(spec.graph->n(), 13);
    EXPECT_EQ(spec.graph->k(), 3);
    EXPECT_EQ(spec.coin, CoinKind::Cg);
    EXPECT_EQ(spec.loop_weight, 1.0);
    EXPECT_EQ(spec.target_counts, std::vector<std::uint64_t>{3});
    EXPECT_EQ(spec.t_max, 400U);
    EXPECT_EQ(spec.peak.rule, PeakRule::FirstLocalMax);
}

TEST(ParseArgs, TraceGroverDefaults) {
    const auto spec = parse({"trace", "--graph", "4,2", "--coin", "grov", "--targets", "1"});
    EXPECT_EQ(spec.coin, CoinKind::Cgrov);
    EXPECT_FALSE(spec.loop_weight);
    EXPECT_FALSE(spec.t_max);
    EXPECT_TRUE(spec.output.empty());
}

TEST(ParseArgs, MultipleTargetCountsAndPeakRule) {
    const auto spec = parse({"trace", "--graph", "25,2", "--coin", "skw", "--targets", "1,3,6",
                             "--peak-rule", "global"});
    EXPECT_EQ(spec.target_counts, (std::vector<std::uint64_t>{1, 3, 6}));
    EXPECT_EQ(spec.peak.rule, PeakRule::GlobalMax);
}

TEST(ParseArgs, ExplicitTargetSet) {
    const auto spec =
        parse({"trace", "--graph", "6,2", "--coin", "grov", "--target-set", "7,2,3"});
    EXPECT_EQ(spec.target_set, (std::vector<std::uint64_t>{2, 3, 7}));
    EXPECT_TRUE(spec.target_counts.empty());
    EXPECT_NE(usage_message({"trace", "--graph", "6,2", "--coin", "grov", "--target-set", "7,7"})
                  .find("--target-set"),
              std::string::npos);
    EXPECT_NE(usage_message({"trace", "--graph", "6,2", "--coin", "grov", "--target-set", "15"})
                  .find("--target-set"),
              std::string::npos);
}

TEST(ParseArgs, SweepDefaults) {
    const auto spec = parse({"sweep", "--graph", "10,3", "--coin", "l", "--targets", "1"});
    EXPECT_EQ(spec.command, Command::Sweep);
    EXPECT_EQ(spec.grid_min, 0.01);
    EXPECT_EQ(spec.grid_max, 100.0);
    EXPECT_EQ(spec.grid_points, 50U);
}

TEST(ParseArgs, PresetAndVerify) {
    const auto preset = parse({"preset", "fig3a", "--out-dir", "/tmp/x"});
    EXPECT_EQ(preset.command, Command::Preset);
    EXPECT_EQ(preset.preset_name, "fig3a");
    EXPECT_EQ(preset.output_dir, "/tmp/x");
    const auto verify = parse({"verify"});
    EXPECT_TRUE(verify.verify_oracle && verify.verify_unitarity && verify.verify_grover_law);
    const auto only = parse({"verify", "--oracle"});
    EXPECT_TRUE(only.verify_oracle);
    EXPECT_FALSE(only.verify_unitarity || only.verify_grover_law);
}

TEST(ParseArgs, ErrorsNameTheOffendingFlag) {
    const std::vector<std::string> messages{
        usage_message({"trace", "--graph", "13,3", "--coin", "skw", "--loop", "1", "--targets",
                       "1"}),
        usage_message({"trace", "--graph", "13,3", "--coin", "fancy", "--targets", "1"}),
        usage_message({"trace", "--graph", "5,2", "--coin", "grov", "--targets", "11"}),
        usage_message({"trace", "--graph", "5,3", "--coin", "grov", "--targets", "1"}),
        usage_message({"trace", "--graph", "13,3", "--coin", "g", "--targets", "1"}),
        usage_message({"trace", "--graph", "13,3", "--coin", "l", "--loop", "0", "--targets",
                       "1"}),
        usage_message({"trace", "--graph", "13,3", "--coin", "grov"}),
        usage_message({"trace", "--graph", "13,3", "--coin", "grov", "--targets", "0"}),
    };
    EXPECT_NE(messages[0].find("--loop"), std::string::npos) << messages[0];
    EXPECT_NE(messages[1].find("--coin"), std::string::npos) << messages[1];
    EXPECT_NE(messages[2].find("--targets"), std::string::npos) << messages[2];
    EXPECT_NE(messages[3].find("--graph"), std::string::npos) << messages[3];
    EXPECT_NE(messages[4].find("--loop"), std::string::npos) << messages[4];
    EXPECT_NE(messages[5].find("--loop"), std::string::npos) << messages[5];
    EXPECT_NE(messages[6].find("--targets"), std::string::npos) << messages[6];
    EXPECT_NE(messages[7].find("--targets"), std::string::npos) << messages[7];
    for (std::size_t i = 0; i < messages.size(); ++i) {
        EXPECT_NE(messages[i], "<no error>") << i;
        for (std::size_t j = i + 1; j < messages.size(); ++j) {
            EXPECT_NE(messages[i], messages[j]) << i << " vs " << j;
        }
    }
}

TEST(ParseArgs, SweepRestrictions) {
    EXPECT_NE(usage_message({"sweep", "--graph", "10,3", "--coin", "grov", "--targets", "1"}),
              "<no error>");
    EXPECT_NE(
        usage_message({"sweep", "--graph", "10,3", "--coin", "g", "--targets", "1", "--loop", "1"}),
        "<no error>");
    EXPECT_NE(usage_message({"sweep", "--graph", "10,3", "--coin", "g", "--targets", "1,3"}),
              "<no error>");
}

TEST(FormatReal, TwelveSignificantDigits) {
    EXPECT_EQ(format_real(1.0 / 6.0), "0.166666666667");
    EXPECT_EQ(format_real(0.0), "0");
    EXPECT_EQ(format_real(1.0), "1");
    EXPECT_EQ(format_real(1.5e-20), "1.5e-20");
}

TEST(TraceCsv, StdoutShapeAndValues) {
    const auto r = invoke({"trace", "--graph", "4,2", "--coin", "grov", "--targets", "1",
                           "--steps", "3"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "step,p_M1\n0,0.166666666667\n1,0.166666666667\n2,0.666666666667\n"
                     "3,0.166666666667\n");
}

TEST(TraceCsv, FileWithSidecarAndRoundTrip) {
    TempDir dir;
    const auto csv = dir.path() / "run.csv";
    const auto r = invoke({"trace", "--graph", "13,3", "--coin", "g", "--loop", "1.0",
                           "--targets", "1,3", "--steps", "400", "--out", csv.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto table = read_csv(csv);
    EXPECT_EQ(table.header, (std::vector<std::string>{"step", "p_M1", "p_M3"}));
    ASSERT_EQ(table.rows.size(), 401U);

    const auto text = slurp(csv);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 402);
    EXPECT_EQ(text.find('\r'), std::string::npos);

    const auto direct = run_trace(WalkConfig::with_prefix_targets(GraphSpec(13, 3), CoinKind::Cg,
                                                                  1.0, 3, 400));
    for (std::size_t t = 0; t < table.rows.size(); ++t) {
        EXPECT_EQ(table.rows[t][0], static_cast<double>(t));
        EXPECT_NEAR(table.rows[t][2], direct.p[t], 1e-12 * std::max(1.0, direct.p[t]));
    }

    const auto sidecar = nlohmann::json::parse(slurp(sidecar_path(csv)));
    for (const char *key : {"graph_n", "graph_k", "N", "d", "coin", "l", "targets", "t_max",
                            "peak_rule", "peak_window", "t_peak", "p_peak"}) {
        EXPECT_TRUE(sidecar.contains(key)) << key;
    }
    EXPECT_EQ(sidecar["N"], 286);
    EXPECT_EQ(sidecar["d"], 30);
    EXPECT_EQ(sidecar["coin"], "g");
    EXPECT_EQ(sidecar["targets"], nlohmann::json::array({1, 3}));
    EXPECT_EQ(sidecar["t_max"], 400);
    ASSERT_TRUE(direct.peak);
    EXPECT_EQ(sidecar["t_peak"][1], direct.peak->step);
}

TEST(TraceCsv, ReRunsAreByteIdentical) {
    TempDir dir;
    const auto a = dir.path() / "a.csv";
    const auto b = dir.path() / "b.csv";
    for (const auto &p : {a, b}) {
        const auto r = invoke({"trace", "--graph", "10,3", "--coin", "l", "--loop", "0.3",
                               "--targets", "1,3,6", "--out", p.string()});
        ASSERT_EQ(r.code, kExitOk) << r.err;
    }
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(slurp(sidecar_path(a)), slurp(sidecar_path(b)));
}

TEST(TraceCsv, ExplicitSetColumns) {
    const auto r = invoke({"trace", "--graph", "6,2", "--coin", "grov", "--target-set", "0,4",
                           "--steps", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "step,p_set0");
}

TEST(TraceCsv, UnwritablePathIsAnIoError) {
    const std::string bad = "/nonexistent-dir/sub/run.csv";
    const auto r = invoke({"trace", "--graph", "4,2", "--coin", "grov", "--targets", "1",
                           "--out", bad});
    EXPECT_EQ(r.code, kExitIo);
    EXPECT_NE(r.err.find(bad), std::string::npos) << r.err;
}

TEST(SweepCsv, HeaderAndRows) {
    const auto r = invoke({"sweep", "--graph", "6,2", "--coin", "l", "--targets", "1",
                           "--grid-min", "0.1", "--grid-max", "10", "--grid-points", "5"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::istringstream in(r.out);
    const auto table = parse_csv(in);
    EXPECT_EQ(table.header, (std::vector<std::string>{"l", "p_peak_l", "t_peak_l"}));
    ASSERT_EQ(table.rows.size(), 5U);
    EXPECT_EQ(table.rows.front()[0], 0.1);
    EXPECT_EQ(table.rows.back()[0], 10.0);
}

TEST(ParseCsv, EmptyCellsAndBadCells) {
    std::istringstream ok("a,b\n1,\n");
    const auto table = parse_csv(ok);
    EXPECT_EQ(table.rows[0][0], 1.0);
    EXPECT_TRUE(std::isnan(table.rows[0][1]));
    std::istringstream bad("a,b\n1,zz\n");
    EXPECT_THROW((void)parse_csv(bad), ValidationError);
}

TEST(MainEntry, ExitCodes) {
    EXPECT_EQ(invoke({"--help"}).code, kExitOk);
    EXPECT_EQ(invoke({"trace", "--graph", "4,2", "--coin", "nope", "--targets", "1"}).code,
              kExitValidation);
    EXPECT_EQ(invoke({"bogus"}).code, kExitValidation);
    EXPECT_EQ(invoke({"preset", "fig9z"}).code, kExitValidation);
    const auto list = invoke({"preset", "--list"});
    EXPECT_EQ(list.code, kExitOk);
    EXPECT_EQ(std::count(list.out.begin(), list.out.end(), '\n'), 26);
    EXPECT_EQ(list.out.find("-text"), std::string::npos);
    const auto variants = invoke({"preset", "--list-variants"});
    EXPECT_EQ(std::count(variants.out.begin(), variants.out.end(), '\n'), 4);
}

TEST(PresetCommand, WritesCsvAndSidecar) {
    TempDir dir;
    const auto r = invoke({"preset", "fig4b", "--out-dir", dir.path().string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto table = read_csv(dir.path() / "fig4b.csv");
    EXPECT_EQ(table.header, (std::vector<std::string>{"step", "p_M1", "p_M3", "p_M6"}));
    const auto sidecar = nlohmann::json::parse(slurp(dir.path() / "fig4b.json"));
    EXPECT_EQ(sidecar["coin"], "grov");
}

TEST(VerifyReport, PassLogic) {
    VerifyReport report;
    EXPECT_TRUE(report.passed());
    report.checks.push_back({"g", "a", true, "", nullptr});
    EXPECT_TRUE(report.passed());
    report.checks.push_back({"g", "b", false, "broken", nullptr});
    EXPECT_FALSE(report.passed());
    const auto j = report.to_json();
    EXPECT_EQ(j["passed"], false);
    EXPECT_NE(report.to_text().find("broken"), std::string::npos);
}

TEST(VerifyCommand, OracleChecksPass) {
    const auto report = run_verify(VerifyOptions{true, false, false, 50});
    EXPECT_FALSE(report.checks.empty());
    EXPECT_TRUE(report.passed()) << report.to_text();
    const auto r = invoke({"verify", "--oracle", "--json"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_EQ(nlohmann::json::parse(r.out)["passed"], true);
}

} // namespace
} // namespace jwalk::cli
