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
 * Dense reference model of the search walk for small graphs.
 *
 * Builds the coin and shift as explicit matrices, one column per basis arc,
 * from a brute-force enumeration of J(n,k) (bitmask subsets, popcount
 * adjacency). Nothing here goes through graph.cpp or engine.cpp; the only
 * shared piece is the CoinKind enum and the layout convention (vertices in
 * lexicographic order, edge slots by ascending neighbour, self-loop last).
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "jwalk/engine.hpp"

namespace jwalk::oracle {

struct DenseGraph {
    int n{0};
    int k{0};
    /// Sorted tuples in lexicographic order.
    std::vector<std::vector<int>> vertices;
    /// adjacency[v]: neighbour indices, ascending.
    std::vector<std::vector<std::size_t>> adjacency;
};

[[nodiscard]] DenseGraph enumerate_johnson(int n, int k);

/// Vertices 0..count-1 are marked.
struct DenseWalk {
    DenseGraph graph;
    CoinKind coin{CoinKind::Cgrov};
    double loop_weight{0.0};
    std::size_t target_count{0};

    [[nodiscard]] std::size_t coin_dimension() const;
    [[nodiscard]] Eigen::MatrixXcd coin_matrix() const;
    [[nodiscard]] Eigen::MatrixXcd shift_matrix() const;
    /// S * C.
    [[nodiscard]] Eigen::MatrixXcd evolution_matrix() const;
    [[nodiscard]] Eigen::VectorXcd initial_state() const;
    [[nodiscard]] double success_probability(const Eigen::VectorXcd &state) const;
};

struct OracleReport {
    int n{0};
    int k{0};
    CoinKind coin{CoinKind::Cgrov};
    double loop_weight{0.0};
    std::size_t target_count{0};
    std::size_t steps{0};
    /// max over t <= steps and all arcs of |engine - dense|.
    double max_amplitude_error{0.0};
    double max_probability_error{0.0};
};

/// Runs the engine and the dense model side by side for `steps` steps.
[[nodiscard]] OracleReport compare_with_engine(int n, int k, CoinKind coin, double loop_weight,
                                               std::size_t target_count, std::size_t steps);

} // namespace jwalk::oracle
