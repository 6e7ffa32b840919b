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
 * Coined quantum walk search on J(n,k): state preparation, the four search
 * coins, the flip-flop shift and target-probability measurement.
 *
 * Amplitudes are stored vertex-major, slot-minor: vertex v owns the block
 * [v*c, (v+1)*c) where c = d for the standard walk and c = d+1 for the
 * lackadaisical walk (self-loop in the last slot).
 */
#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "jwalk/graph.hpp"

namespace jwalk {

using Amplitude = std::complex<double>;

enum class CoinKind {
    Cg,    ///< lackadaisical; targets flip the self-loop sign, then diffuse
    Cgrov, ///< standard Grover coin, negated at targets
    Cl,    ///< lackadaisical Grover coin, negated at targets
    Cskw,  ///< standard; Grover diffusion off target, -I on target
};

[[nodiscard]] constexpr bool is_lackadaisical(CoinKind coin) noexcept {
    return coin == CoinKind::Cg || coin == CoinKind::Cl;
}

/// Short name used on the command line and in output files: g, grov, l, skw.
[[nodiscard]] std::string_view coin_name(CoinKind coin) noexcept;
[[nodiscard]] std::optional<CoinKind> parse_coin(std::string_view name) noexcept;

struct WalkConfig {
    GraphSpec spec;
    CoinKind coin{CoinKind::Cgrov};
    /// Self-loop weight l. Must be 0 for Cgrov/Cskw; Cg/Cl accept l >= 0.
    double loop_weight{0.0};
    /// Marked vertices, sorted and unique.
    std::vector<VertexId> targets;
    std::uint64_t t_max{1};

    /// Marks ranks 0..count-1, the first `count` subsets in lexicographic order.
    [[nodiscard]] static WalkConfig with_prefix_targets(const GraphSpec &spec, CoinKind coin,
                                                        double loop_weight, std::uint64_t count,
                                                        std::uint64_t t_max);

    [[nodiscard]] std::size_t coin_dimension() const noexcept {
        return static_cast<std::size_t>(spec.degree()) + (is_lackadaisical(coin) ? 1U : 0U);
    }

    /// Throws ValidationError on an inconsistent configuration.
    void validate() const;
};

class StateVector {
  public:
    StateVector(std::size_t vertex_count, std::size_t coin_dimension);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }
    [[nodiscard]] std::size_t coin_dimension() const noexcept { return coin_dimension_; }
    [[nodiscard]] std::size_t size() const noexcept { return amplitudes_.size(); }

    [[nodiscard]] std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }

    [[nodiscard]] std::span<Amplitude> block(std::size_t vertex) noexcept {
        return {amplitudes_.data() + vertex * coin_dimension_, coin_dimension_};
    }
    [[nodiscard]] std::span<const Amplitude> block(std::size_t vertex) const noexcept {
        return {amplitudes_.data() + vertex * coin_dimension_, coin_dimension_};
    }

    Amplitude &operator[](std::size_t i) noexcept { return amplitudes_[i]; }
    const Amplitude &operator[](std::size_t i) const noexcept { return amplitudes_[i]; }

    /// Sum of |a|^2 in index order.
    [[nodiscard]] double norm_squared() const noexcept;

  private:
    std::size_t vertex_count_;
    std::size_t coin_dimension_;
    std::vector<Amplitude> amplitudes_;
};

/**
 * Reflection axis w of the Grover diffusion D = 2|w><w| - I. Edge slots
 * carry 1/sqrt(d+l); the self-loop slot, when present, sqrt(l)/sqrt(d+l).
 */
struct CoinWeights {
    std::size_t degree{0};
    bool has_loop{false};
    double edge{0.0};
    double loop{0.0};

    [[nodiscard]] double at(std::size_t slot) const noexcept {
        return slot < degree ? edge : loop;
    }
    [[nodiscard]] std::vector<double> to_vector() const;
};

[[nodiscard]] CoinWeights coin_weights(const WalkConfig &cfg);

/// D(psi) = 2 w (w . psi) - psi on one vertex block, in O(c).
void grover_diffuse(std::span<Amplitude> block, const CoinWeights &weights);

/**
 * One configured walk: owns its configuration and shares the immutable arc
 * table of its graph. Steps mutate a caller-owned StateVector in place.
 */
class QuantumWalk {
  public:
    explicit QuantumWalk(WalkConfig cfg);
    /// Reuses a table built for cfg.spec.
    QuantumWalk(WalkConfig cfg, std::shared_ptr<const ArcTable> table);

    [[nodiscard]] const WalkConfig &config() const noexcept { return cfg_; }
    [[nodiscard]] const ArcTable &arcs() const noexcept { return *table_; }
    [[nodiscard]] const CoinWeights &weights() const noexcept { return weights_; }
    [[nodiscard]] bool is_target(std::size_t vertex) const noexcept {
        return target_mask_[vertex] != 0;
    }

    /// |psi_in> = (1/sqrt(N)) sum_v |v> (x) |w>.
    [[nodiscard]] StateVector initial_state() const;

    void apply_coin(StateVector &state) const;
    /// Swaps every edge arc with its reverse; self-loops stay.
    void apply_shift(StateVector &state) const;
    /// Coin then shift.
    void step(StateVector &state) const;

    /// Probability of finding the walker on any target vertex: sum of |a|^2
    /// over every slot (self-loop included) of each target block.
    [[nodiscard]] double success_probability(const StateVector &state) const;

    /// p(t) for t = 0..t_max.
    [[nodiscard]] std::vector<double> evolve_trace() const;

  private:
    void check_layout(const StateVector &state) const;

    WalkConfig cfg_;
    std::shared_ptr<const ArcTable> table_;
    CoinWeights weights_;
    std::vector<char> target_mask_;
    /// Flat (i, j) amplitude index pairs, i < j, exchanged by the shift.
    std::vector<std::uint32_t> swap_pairs_;
};

} // namespace jwalk
