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
#include "jwalk/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "jwalk/error.hpp"

namespace jwalk {

std::string_view coin_name(CoinKind coin) noexcept {
    switch (coin) {
    case CoinKind::Cg:
        return "g";
    case CoinKind::Cgrov:
        return "grov";
    case CoinKind::Cl:
        return "l";
    case CoinKind::Cskw:
        return "skw";
    }
    return "?";
}

std::optional<CoinKind> parse_coin(std::string_view name) noexcept {
    for (const auto coin : {CoinKind::Cg, CoinKind::Cgrov, CoinKind::Cl, CoinKind::Cskw}) {
        if (coin_name(coin) == name) {
            return coin;
        }
    }
    return std::nullopt;
}

WalkConfig WalkConfig::with_prefix_targets(const GraphSpec &spec, CoinKind coin,
                                           double loop_weight, std::uint64_t count,
                                           std::uint64_t t_max) {
    if (count > spec.vertex_count()) {
        throw ValidationError("target count " + std::to_string(count) + " exceeds N = " +
                              std::to_string(spec.vertex_count()));
    }
    WalkConfig cfg{spec, coin, loop_weight, {}, t_max};
    cfg.targets.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t r = 0; r < count; ++r) {
        cfg.targets.push_back(VertexId{r});
    }
    return cfg;
}

void WalkConfig::validate() const {
    if (!std::isfinite(loop_weight) || loop_weight < 0.0) {
        throw ValidationError("self-loop weight must be finite and >= 0");
    }
    if (!is_lackadaisical(coin) && loop_weight != 0.0) {
        throw ValidationError("coin " + std::string(coin_name(coin)) +
                              " has no self-loop; weight must be 0");
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i].rank >= spec.vertex_count()) {
            throw ValidationError("target rank " + std::to_string(targets[i].rank) +
                                  " outside [0, " + std::to_string(spec.vertex_count()) + ")");
        }
        if (i > 0 && !(targets[i - 1] < targets[i])) {
            throw ValidationError("targets must be sorted and unique");
        }
    }
}

StateVector::StateVector(std::size_t vertex_count, std::size_t coin_dimension)
    : vertex_count_(vertex_count), coin_dimension_(coin_dimension),
      amplitudes_(vertex_count * coin_dimension) {}

double StateVector::norm_squared() const noexcept {
    double sum = 0.0;
    for (const auto &a : amplitudes_) {
        sum += std::norm(a);
    }
    return sum;
}

std::vector<double> CoinWeights::to_vector() const {
    std::vector<double> w(degree, edge);
    if (has_loop) {
        w.push_back(loop);
    }
    return w;
}

CoinWeights coin_weights(const WalkConfig &cfg) {
    const auto d = static_cast<double>(cfg.spec.degree());
    CoinWeights w;
    w.degree = static_cast<std::size_t>(cfg.spec.degree());
    w.has_loop = is_lackadaisical(cfg.coin);
    const double l = w.has_loop ? cfg.loop_weight : 0.0;
    w.edge = 1.0 / std::sqrt(d + l);
    w.loop = w.has_loop ? std::sqrt(l) / std::sqrt(d + l) : 0.0;
    return w;
}

void grover_diffuse(std::span<Amplitude> block, const CoinWeights &weights) {
    const std::size_t d = weights.degree;
    Amplitude edge_sum{0.0, 0.0};
    for (std::size_t s = 0; s < d; ++s) {
        edge_sum += block[s];
    }
    Amplitude overlap = weights.edge * edge_sum;
    if (weights.has_loop) {
        overlap += weights.loop * block[d];
    }
    const Amplitude edge_term = 2.0 * weights.edge * overlap;
    for (std::size_t s = 0; s < d; ++s) {
        block[s] = edge_term - block[s];
    }
    if (weights.has_loop) {
        block[d] = 2.0 * weights.loop * overlap - block[d];
    }
}

QuantumWalk::QuantumWalk(WalkConfig cfg)
    : QuantumWalk(cfg, std::make_shared<const ArcTable>(cfg.spec)) {}

QuantumWalk::QuantumWalk(WalkConfig cfg, std::shared_ptr<const ArcTable> table)
    : cfg_(std::move(cfg)), table_(std::move(table)) {
    cfg_.validate();
    if (!table_ || !(table_->spec() == cfg_.spec)) {
        throw ContractViolation("arc table does not belong to the configured graph");
    }
    weights_ = coin_weights(cfg_);
    target_mask_.assign(table_->vertex_count(), 0);
    for (const auto t : cfg_.targets) {
        target_mask_[static_cast<std::size_t>(t.rank)] = 1;
    }

    const std::size_t c = cfg_.coin_dimension();
    if (table_->vertex_count() * c > std::numeric_limits<std::uint32_t>::max()) {
        throw ValidationError("state too large for 32-bit arc indexing");
    }
    swap_pairs_.reserve(table_->vertex_count() * table_->degree());
    for (std::size_t v = 0; v < table_->vertex_count(); ++v) {
        const auto nbrs = table_->neighbors_of(v);
        const auto back = table_->reverse_slots_of(v);
        for (std::size_t s = 0; s < nbrs.size(); ++s) {
            if (v < nbrs[s]) {
                swap_pairs_.push_back(static_cast<std::uint32_t>(v * c + s));
                swap_pairs_.push_back(static_cast<std::uint32_t>(nbrs[s] * c + back[s]));
            }
        }
    }
}

void QuantumWalk::check_layout(const StateVector &state) const {
    if (state.vertex_count() != table_->vertex_count() ||
        state.coin_dimension() != cfg_.coin_dimension()) {
        throw ContractViolation("state layout " + std::to_string(state.vertex_count()) + "x" +
                                std::to_string(state.coin_dimension()) +
                                " does not match walk layout " +
                                std::to_string(table_->vertex_count()) + "x" +
                                std::to_string(cfg_.coin_dimension()));
    }
}

StateVector QuantumWalk::initial_state() const {
    const std::size_t vertices = table_->vertex_count();
    const std::size_t c = cfg_.coin_dimension();
    StateVector state(vertices, c);
    const double scale = 1.0 / std::sqrt(static_cast<double>(vertices));
    for (std::size_t v = 0; v < vertices; ++v) {
        auto block = state.block(v);
        for (std::size_t s = 0; s < c; ++s) {
            block[s] = weights_.at(s) * scale;
        }
    }
    return state;
}

void QuantumWalk::apply_coin(StateVector &state) const {
    check_layout(state);
    const std::size_t d = weights_.degree;
    for (std::size_t v = 0; v < state.vertex_count(); ++v) {
        auto block = state.block(v);
        if (target_mask_[v] == 0) {
            grover_diffuse(block, weights_);
            continue;
        }
        switch (cfg_.coin) {
        case CoinKind::Cg:
            // The sign attaches to the self-loop basis state before C acts.
            block[d] = -block[d];
            grover_diffuse(block, weights_);
            break;
        case CoinKind::Cgrov:
        case CoinKind::Cl:
            grover_diffuse(block, weights_);
            for (auto &a : block) {
                a = -a;
            }
            break;
        case CoinKind::Cskw:
            for (auto &a : block) {
                a = -a;
            }
            break;
        }
    }
}

void QuantumWalk::apply_shift(StateVector &state) const {
    check_layout(state);
    Amplitude *amps = state.amplitudes().data();
    const std::uint32_t *pair = swap_pairs_.data();
    const std::uint32_t *const end = pair + swap_pairs_.size();
    for (; pair != end; pair += 2) {
        std::swap(amps[pair[0]], amps[pair[1]]);
    }
}

void QuantumWalk::step(StateVector &state) const {
    apply_coin(state);
    apply_shift(state);
}

double QuantumWalk::success_probability(const StateVector &state) const {
    check_layout(state);
    double p = 0.0;
    for (const auto t : cfg_.targets) {
        for (const auto &a : state.block(static_cast<std::size_t>(t.rank))) {
            p += std::norm(a);
        }
    }
    return p;
}

std::vector<double> QuantumWalk::evolve_trace() const {
    if (cfg_.t_max < 1) {
        throw ValidationError("t_max must be >= 1");
    }
    StateVector state = initial_state();
    std::vector<double> trace;
    trace.reserve(static_cast<std::size_t>(cfg_.t_max) + 1);
    trace.push_back(success_probability(state));
    for (std::uint64_t t = 1; t <= cfg_.t_max; ++t) {
        step(state);
        trace.push_back(success_probability(state));
    }
    return trace;
}

} // namespace jwalk
