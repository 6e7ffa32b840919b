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
#include "jwalk/dense_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace jwalk::oracle {

DenseGraph enumerate_johnson(int n, int k) {
    if (n < 1 || n > 24 || k < 1 || k > n) {
        throw std::invalid_argument("dense oracle supports 1 <= k <= n <= 24");
    }
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        if (std::popcount(m) == k) {
            masks.push_back(m);
        }
    }
    auto tuple_of = [n](std::uint32_t m) {
        std::vector<int> t;
        for (int e = 1; e <= n; ++e) {
            if ((m >> (e - 1)) & 1U) {
                t.push_back(e);
            }
        }
        return t;
    };
    std::sort(masks.begin(), masks.end(),
              [&](std::uint32_t a, std::uint32_t b) { return tuple_of(a) < tuple_of(b); });

    DenseGraph g;
    g.n = n;
    g.k = k;
    for (const auto m : masks) {
        g.vertices.push_back(tuple_of(m));
    }
    g.adjacency.resize(masks.size());
    for (std::size_t a = 0; a < masks.size(); ++a) {
        for (std::size_t b = 0; b < masks.size(); ++b) {
            if (std::popcount(masks[a] & masks[b]) == k - 1) {
                g.adjacency[a].push_back(b);
            }
        }
    }
    return g;
}

std::size_t DenseWalk::coin_dimension() const {
    return graph.adjacency.front().size() + (is_lackadaisical(coin) ? 1 : 0);
}

namespace {

Eigen::VectorXd edge_state(std::size_t degree, bool lackadaisical, double l) {
    const std::size_t c = degree + (lackadaisical ? 1 : 0);
    Eigen::VectorXd w = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(c));
    if (lackadaisical) {
        w(static_cast<Eigen::Index>(degree)) = std::sqrt(l);
    }
    return w / std::sqrt(static_cast<double>(degree) + (lackadaisical ? l : 0.0));
}

} // namespace

Eigen::MatrixXcd DenseWalk::coin_matrix() const {
    const std::size_t d = graph.adjacency.front().size();
    const std::size_t c = coin_dimension();
    const auto dim = static_cast<Eigen::Index>(graph.vertices.size() * c);
    const Eigen::VectorXd w = edge_state(d, is_lackadaisical(coin), loop_weight);
    const Eigen::MatrixXd grover =
        2.0 * w * w.transpose() - Eigen::MatrixXd::Identity(w.size(), w.size());

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t m = 0; m < graph.vertices.size(); ++m) {
        const bool marked = m < target_count;
        const auto base = static_cast<Eigen::Index>(m * c);
        for (std::size_t x = 0; x < c; ++x) {
            const auto col = static_cast<Eigen::Index>(x);
            // Image of basis state |m> (x) |m_x>.
            Eigen::VectorXd image = grover.col(col);
            if (marked) {
                switch (coin) {
                case CoinKind::Cg:
                    if (x == d) {
                        image = -image;
                    }
                    break;
                case CoinKind::Cgrov:
                case CoinKind::Cl:
                    image = -image;
                    break;
                case CoinKind::Cskw:
                    image = -Eigen::VectorXd::Unit(static_cast<Eigen::Index>(c), col);
                    break;
                }
            }
            out.block(base, base + col, static_cast<Eigen::Index>(c), 1) = image.cast<std::complex<double>>();
        }
    }
    return out;
}

Eigen::MatrixXcd DenseWalk::shift_matrix() const {
    const std::size_t d = graph.adjacency.front().size();
    const std::size_t c = coin_dimension();
    const auto dim = static_cast<Eigen::Index>(graph.vertices.size() * c);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t m = 0; m < graph.vertices.size(); ++m) {
        for (std::size_t x = 0; x < d; ++x) {
            const std::size_t target = graph.adjacency[m][x];
            const auto &back = graph.adjacency[target];
            const auto slot = static_cast<std::size_t>(
                std::find(back.begin(), back.end(), m) - back.begin());
            out(static_cast<Eigen::Index>(target * c + slot), static_cast<Eigen::Index>(m * c + x)) = 1.0;
        }
        if (c > d) {
            const auto loop = static_cast<Eigen::Index>(m * c + d);
            out(loop, loop) = 1.0;
        }
    }
    return out;
}

Eigen::MatrixXcd DenseWalk::evolution_matrix() const {
    return shift_matrix() * coin_matrix();
}

Eigen::VectorXcd DenseWalk::initial_state() const {
    const std::size_t d = graph.adjacency.front().size();
    const Eigen::VectorXd w = edge_state(d, is_lackadaisical(coin), loop_weight);
    const auto vertices = static_cast<Eigen::Index>(graph.vertices.size());
    Eigen::VectorXcd psi(vertices * w.size());
    for (Eigen::Index v = 0; v < vertices; ++v) {
        psi.segment(v * w.size(), w.size()) =
            (w / std::sqrt(static_cast<double>(vertices))).cast<std::complex<double>>();
    }
    return psi;
}

double DenseWalk::success_probability(const Eigen::VectorXcd &state) const {
    const auto c = static_cast<Eigen::Index>(coin_dimension());
    double p = 0.0;
    for (std::size_t m = 0; m < target_count; ++m) {
        p += state.segment(static_cast<Eigen::Index>(m) * c, c).squaredNorm();
    }
    return p;
}

OracleReport compare_with_engine(int n, int k, CoinKind coin, double loop_weight,
                                 std::size_t target_count, std::size_t steps) {
    const DenseWalk dense{enumerate_johnson(n, k), coin, loop_weight, target_count};
    const Eigen::MatrixXcd evolution = dense.evolution_matrix();
    Eigen::VectorXcd reference = dense.initial_state();

    const QuantumWalk walk(WalkConfig::with_prefix_targets(GraphSpec(n, k), coin, loop_weight,
                                                           target_count, steps));
    StateVector state = walk.initial_state();

    OracleReport report{n, k, coin, loop_weight, target_count, steps, 0.0, 0.0};
    auto compare = [&] {
        if (static_cast<Eigen::Index>(state.size()) != reference.size()) {
            throw std::logic_error("engine and dense layouts differ in size");
        }
        for (std::size_t i = 0; i < state.size(); ++i) {
            report.max_amplitude_error = std::max(
                report.max_amplitude_error, std::abs(state[i] - reference(static_cast<Eigen::Index>(i))));
        }
        report.max_probability_error =
            std::max(report.max_probability_error,
                     std::abs(walk.success_probability(state) - dense.success_probability(reference)));
    };
    compare();
    for (std::size_t t = 0; t < steps; ++t) {
        walk.step(state);
        reference = evolution * reference;
        compare();
    }
    return report;
}

} // namespace jwalk::oracle
