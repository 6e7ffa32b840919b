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
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "jwalk/dense_oracle.hpp"
#include "jwalk/engine.hpp"
#include "jwalk/error.hpp"

namespace jwalk {
namespace {

constexpr CoinKind kAllCoins[] = {CoinKind::Cg, CoinKind::Cgrov, CoinKind::Cl, CoinKind::Cskw};

double default_loop(CoinKind coin) { return is_lackadaisical(coin) ? 1.0 : 0.0; }

QuantumWalk make_walk(int n, int k, CoinKind coin, std::uint64_t m, double l = -1.0,
                      std::uint64_t t_max = 10) {
    return QuantumWalk(WalkConfig::with_prefix_targets(GraphSpec(n, k), coin,
                                                       l < 0.0 ? default_loop(coin) : l, m, t_max));
}

StateVector random_state(const QuantumWalk &walk, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    StateVector s = walk.initial_state();
    for (auto &a : s.amplitudes()) {
        a = {gauss(rng), gauss(rng)};
    }
    const double norm = std::sqrt(s.norm_squared());
    for (auto &a : s.amplitudes()) {
        a /= norm;
    }
    return s;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

TEST(CoinNames, RoundTrip) {
    for (const auto coin : kAllCoins) {
        EXPECT_EQ(parse_coin(coin_name(coin)), coin);
    }
    EXPECT_EQ(parse_coin("G"), std::nullopt);
    EXPECT_EQ(parse_coin("grover"), std::nullopt);
}

TEST(WalkConfig, Validation) {
    const GraphSpec g(5, 2);
    EXPECT_THROW(WalkConfig::with_prefix_targets(g, CoinKind::Cg, 1.0, 11, 5), ValidationError);
    EXPECT_THROW(WalkConfig::with_prefix_targets(g, CoinKind::Cskw, 1.0, 1, 5).validate(),
                 ValidationError);
    EXPECT_THROW(WalkConfig::with_prefix_targets(g, CoinKind::Cl, -0.5, 1, 5).validate(),
                 ValidationError);
    EXPECT_THROW(WalkConfig::with_prefix_targets(g, CoinKind::Cl, NAN, 1, 5).validate(),
                 ValidationError);
    WalkConfig unsorted{g, CoinKind::Cgrov, 0.0, {VertexId{3}, VertexId{1}}, 5};
    EXPECT_THROW(unsorted.validate(), ValidationError);
    WalkConfig out_of_range{g, CoinKind::Cgrov, 0.0, {VertexId{10}}, 5};
    EXPECT_THROW(out_of_range.validate(), ValidationError);
    EXPECT_NO_THROW(WalkConfig::with_prefix_targets(g, CoinKind::Cl, 0.0, 0, 5).validate());
}

TEST(CoinWeights, UnitNorm) {
    for (const auto coin : kAllCoins) {
        for (const double l : {0.0, 0.1, 1.0, 10.0}) {
            if (!is_lackadaisical(coin) && l != 0.0) {
                continue;
            }
            const auto cfg = WalkConfig::with_prefix_targets(GraphSpec(13, 4), coin, l, 1, 1);
            double norm = 0.0;
            for (const double w : coin_weights(cfg).to_vector()) {
                norm += w * w;
            }
            EXPECT_NEAR(norm, 1.0, 1e-14);
            EXPECT_EQ(coin_weights(cfg).to_vector().size(), cfg.coin_dimension());
        }
    }
}

TEST(InitialState, UniformOnCompleteGraphJ51) {
    const auto walk = make_walk(5, 1, CoinKind::Cgrov, 1);
    const auto s = walk.initial_state();
    ASSERT_EQ(s.size(), 20U);
    for (const auto &a : s.amplitudes()) {
        EXPECT_NEAR(a.real(), 1.0 / std::sqrt(20.0), 1e-15);
        EXPECT_EQ(a.imag(), 0.0);
    }
}

TEST(InitialState, LackadaisicalJ51UnitLoop) {
    // 1/sqrt(N (d + l)) = 1/sqrt(5 * 5) on every slot, self-loop included.
    const auto walk = make_walk(5, 1, CoinKind::Cl, 1, 1.0);
    const auto s = walk.initial_state();
    ASSERT_EQ(s.size(), 25U);
    for (const auto &a : s.amplitudes()) {
        EXPECT_NEAR(a.real(), 0.2, 1e-15);
    }
}

TEST(InitialState, NeighbourAndLoopAmplitudes) {
    const GraphSpec g(13, 3);
    const double l = 2.5;
    const auto walk = make_walk(13, 3, CoinKind::Cg, 2, l);
    const auto s = walk.initial_state();
    const double scale = static_cast<double>(g.vertex_count()) * (static_cast<double>(g.degree()) + l);
    for (std::size_t v = 0; v < s.vertex_count(); v += 41) {
        const auto block = s.block(v);
        for (std::size_t slot = 0; slot < g.degree(); ++slot) {
            EXPECT_NEAR(block[slot].real(), 1.0 / std::sqrt(scale), 1e-15);
        }
        EXPECT_NEAR(block[g.degree()].real(), std::sqrt(l) / std::sqrt(scale), 1e-15);
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-13);
}

TEST(GroverDiffuse, UniformBlockIsFixed) {
    CoinWeights w{2, false, 1.0 / std::sqrt(2.0), 0.0};
    std::vector<Amplitude> block{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    grover_diffuse(block, w);
    EXPECT_NEAR(block[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(block[1].real(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(GroverDiffuse, IsAReflection) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 1 + rng() % 40;
        const bool loop = (rng() & 1U) != 0;
        const double l = loop ? std::exp(gauss(rng)) : 0.0;
        CoinWeights w{d, loop, 1.0 / std::sqrt(static_cast<double>(d) + l),
                      std::sqrt(l) / std::sqrt(static_cast<double>(d) + l)};
        std::vector<Amplitude> psi(d + (loop ? 1 : 0));
        for (auto &a : psi) {
            a = {gauss(rng), gauss(rng)};
        }
        auto twice = psi;
        grover_diffuse(twice, w);
        grover_diffuse(twice, w);
        for (std::size_t i = 0; i < psi.size(); ++i) {
            ASSERT_NEAR(std::abs(twice[i] - psi[i]), 0.0, 1e-12);
        }
        const auto axis = w.to_vector();
        std::vector<Amplitude> fixed(axis.begin(), axis.end());
        grover_diffuse(fixed, w);
        for (std::size_t i = 0; i < fixed.size(); ++i) {
            ASSERT_NEAR(std::abs(fixed[i] - axis[i]), 0.0, 1e-14);
        }
    }
}

TEST(ApplyCoin, SkwNegatesTargetBlock) {
    const auto walk = make_walk(6, 2, CoinKind::Cskw, 2);
    std::mt19937_64 rng(11);
    const auto before = random_state(walk, rng);
    auto after = before;
    walk.apply_coin(after);
    for (std::size_t v = 0; v < 2; ++v) {
        for (std::size_t s = 0; s < before.coin_dimension(); ++s) {
            EXPECT_EQ(after.block(v)[s], -before.block(v)[s]);
        }
    }
}

TEST(ApplyCoin, CgFlipsLoopBeforeDiffusion) {
    const auto walk = make_walk(6, 2, CoinKind::Cg, 1, 0.7);
    std::mt19937_64 rng(12);
    const auto before = random_state(walk, rng);
    auto after = before;
    walk.apply_coin(after);
    std::vector<Amplitude> expected(before.block(0).begin(), before.block(0).end());
    expected.back() = -expected.back();
    grover_diffuse(expected, walk.weights());
    for (std::size_t s = 0; s < expected.size(); ++s) {
        EXPECT_NEAR(std::abs(after.block(0)[s] - expected[s]), 0.0, 1e-15);
    }
}

TEST(ApplyCoin, IsBlockDiagonal) {
    std::mt19937_64 rng(13);
    std::normal_distribution<double> gauss;
    for (const auto coin : kAllCoins) {
        const auto walk = make_walk(7, 3, coin, 3);
        for (const std::size_t v : {0UL, 2UL, 20UL, 34UL}) {
            StateVector s(walk.arcs().vertex_count(), walk.config().coin_dimension());
            for (auto &a : s.block(v)) {
                a = {gauss(rng), gauss(rng)};
            }
            walk.apply_coin(s);
            for (std::size_t u = 0; u < s.vertex_count(); ++u) {
                if (u == v) {
                    continue;
                }
                for (const auto &a : s.block(u)) {
                    ASSERT_EQ(a, Amplitude{});
                }
            }
        }
    }
}

TEST(ApplyCoin, LayoutMismatchIsAContractViolation) {
    const auto walk = make_walk(5, 2, CoinKind::Cg, 1);
    StateVector wrong(10, 6);
    EXPECT_THROW(walk.apply_coin(wrong), ContractViolation);
    EXPECT_THROW(walk.apply_shift(wrong), ContractViolation);
    EXPECT_THROW((void)walk.success_probability(wrong), ContractViolation);
}

TEST(ApplyShift, CompleteGraphMovesArcToPartner) {
    const auto walk = make_walk(5, 1, CoinKind::Cgrov, 1);
    StateVector s(5, 4);
    s[0] = 1.0; // vertex 1, slot pointing at vertex 2
    walk.apply_shift(s);
    EXPECT_EQ(s[4], Amplitude(1.0)); // vertex 2, slot pointing at vertex 1
    EXPECT_NEAR(s.norm_squared(), 1.0, 0.0);
}

TEST(ApplyShift, InvolutionPermutationAndLoopsFixed) {
    std::mt19937_64 rng(14);
    for (const auto coin : kAllCoins) {
        const auto walk = make_walk(8, 3, coin, 4);
        const auto original = random_state(walk, rng);
        auto once = original;
        walk.apply_shift(once);
        std::vector<std::pair<double, double>> a;
        std::vector<std::pair<double, double>> b;
        for (std::size_t i = 0; i < original.size(); ++i) {
            a.emplace_back(original[i].real(), original[i].imag());
            b.emplace_back(once[i].real(), once[i].imag());
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
        if (is_lackadaisical(coin)) {
            const std::size_t d = walk.weights().degree;
            for (std::size_t v = 0; v < original.vertex_count(); ++v) {
                EXPECT_EQ(once.block(v)[d], original.block(v)[d]);
            }
        }
        auto twice = once;
        walk.apply_shift(twice);
        EXPECT_EQ(max_abs_diff(twice, original), 0.0);
    }
}

TEST(Step, PreservesNormOnRandomStates) {
    std::mt19937_64 rng(15);
    for (const auto coin : kAllCoins) {
        const auto walk = make_walk(9, 4, coin, 5, is_lackadaisical(coin) ? 0.37 : 0.0);
        auto s = random_state(walk, rng);
        for (int t = 0; t < 200; ++t) {
            walk.step(s);
            ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
        }
    }
}

TEST(SuccessProbability, InitialValueIsTargetFraction) {
    for (const auto coin : kAllCoins) {
        for (const auto [n, k] : std::vector<std::pair<int, int>>{{13, 3}, {25, 2}, {10, 3}}) {
            for (const std::uint64_t m : {0ULL, 1ULL, 3ULL, 6ULL}) {
                const auto walk = make_walk(n, k, coin, m);
                const double expected =
                    static_cast<double>(m) / static_cast<double>(walk.config().spec.vertex_count());
                EXPECT_NEAR(walk.success_probability(walk.initial_state()), expected, 1e-12);
            }
        }
    }
    const auto walk = make_walk(13, 3, CoinKind::Cskw, 3);
    EXPECT_NEAR(walk.success_probability(walk.initial_state()), 3.0 / 286.0, 1e-12);
}

TEST(SuccessProbability, FrozenDenseOracleValuesOnJ42) {
    // From the dense S*C matrix on J(4,2), Grover coin, target rank 0.
    const auto trace = make_walk(4, 2, CoinKind::Cgrov, 1, 0.0, 3).evolve_trace();
    ASSERT_EQ(trace.size(), 4U);
    EXPECT_NEAR(trace[0], 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(trace[1], 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(trace[2], 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(trace[3], 1.0 / 6.0, 1e-15);

    const oracle::DenseWalk dense{oracle::enumerate_johnson(4, 2), CoinKind::Cgrov, 0.0, 1};
    const auto u = dense.evolution_matrix();
    const Eigen::VectorXcd psi3 = u * (u * (u * dense.initial_state()));
    EXPECT_NEAR(trace[3], dense.success_probability(psi3), 1e-14);
}

TEST(SuccessProbability, FrozenDenseOracleValuesOnJ51Lackadaisical) {
    const auto trace = make_walk(5, 1, CoinKind::Cl, 1, 1.0, 4).evolve_trace();
    EXPECT_NEAR(trace[2], 0.968, 1e-14);
    EXPECT_NEAR(trace[3], 0.968, 1e-14);
    EXPECT_NEAR(trace[4], 0.53792, 1e-14);
}

struct OracleCase {
    int n;
    int k;
};

class DenseOracleEquivalence : public testing::TestWithParam<std::tuple<OracleCase, CoinKind, std::size_t>> {};

TEST_P(DenseOracleEquivalence, FiftySteps) {
    const auto [g, coin, m] = GetParam();
    for (const double l : is_lackadaisical(coin) ? std::vector<double>{1.0, 0.1, 10.0}
                                                 : std::vector<double>{0.0}) {
        const auto report = oracle::compare_with_engine(g.n, g.k, coin, l, m, 50);
        EXPECT_LT(report.max_amplitude_error, 1e-12) << "l=" << l;
        EXPECT_LT(report.max_probability_error, 1e-12) << "l=" << l;
    }
}

INSTANTIATE_TEST_SUITE_P(SmallGraphs, DenseOracleEquivalence,
                         testing::Combine(testing::Values(OracleCase{4, 2}, OracleCase{5, 1},
                                                          OracleCase{5, 2}),
                                          testing::ValuesIn(kAllCoins),
                                          testing::Values(std::size_t{1}, std::size_t{2})));

TEST(DenseOracle, MatricesAreUnitary) {
    for (const auto coin : kAllCoins) {
        const oracle::DenseWalk dense{oracle::enumerate_johnson(5, 2), coin, default_loop(coin), 2};
        const auto u = dense.evolution_matrix();
        const auto identity = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
        EXPECT_LT((u.adjoint() * u - identity).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(Invariants, ZeroLoopLackadaisicalMatchesGrover) {
    const auto grover = make_walk(10, 3, CoinKind::Cgrov, 3, 0.0, 200);
    const auto lazy = make_walk(10, 3, CoinKind::Cl, 3, 0.0, 200);
    auto a = grover.initial_state();
    auto b = lazy.initial_state();
    const std::size_t d = grover.weights().degree;
    for (int t = 0; t < 200; ++t) {
        grover.step(a);
        lazy.step(b);
        for (std::size_t v = 0; v < a.vertex_count(); ++v) {
            ASSERT_EQ(b.block(v)[d], Amplitude{});
            for (std::size_t s = 0; s < d; ++s) {
                ASSERT_NEAR(std::abs(a.block(v)[s] - b.block(v)[s]), 0.0, 1e-14);
            }
        }
    }
}

TEST(Invariants, NoTargetsKeepsUniformVertexMarginal) {
    for (const auto coin : kAllCoins) {
        const auto walk = make_walk(9, 3, coin, 0);
        auto s = walk.initial_state();
        const double uniform = 1.0 / static_cast<double>(s.vertex_count());
        for (int t = 0; t < 50; ++t) {
            walk.step(s);
        }
        for (std::size_t v = 0; v < s.vertex_count(); ++v) {
            double p = 0.0;
            for (const auto &a : s.block(v)) {
                p += std::norm(a);
            }
            ASSERT_NEAR(p, uniform, 1e-13);
        }
    }
}

TEST(EvolveTrace, LengthAndDeterminism) {
    const auto walk = make_walk(13, 3, CoinKind::Cg, 3, 1.0, 120);
    const auto a = walk.evolve_trace();
    const auto b = walk.evolve_trace();
    ASSERT_EQ(a.size(), 121U);
    EXPECT_EQ(a, b);
    for (const double p : a) {
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0 + 1e-12);
    }
}

TEST(EvolveTrace, CompleteGraphGroverPeak) {
    const auto trace = make_walk(300, 1, CoinKind::Cgrov, 1, 0.0, 40).evolve_trace();
    const auto peak = std::max_element(trace.begin(), trace.end());
    const double law = M_PI * std::sqrt(300.0) / (2.0 * std::sqrt(2.0));
    EXPECT_NEAR(static_cast<double>(peak - trace.begin()), law, 2.0);
    EXPECT_NEAR(*peak, 0.5, 0.05);
}

TEST(EvolveTrace, CgOnJ10_3ReachesHighProbability) {
    const auto trace = make_walk(10, 3, CoinKind::Cg, 1, 1.0, 200).evolve_trace();
    EXPECT_GT(*std::max_element(trace.begin(), trace.end()), 0.9);
}

TEST(EvolveTrace, RejectsZeroBudget) {
    EXPECT_THROW((void)make_walk(5, 2, CoinKind::Cg, 1, 1.0, 0).evolve_trace(), ValidationError);
}

} // namespace
} // namespace jwalk
