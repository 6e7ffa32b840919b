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
 * Johnson graph combinatorics.
 *
 * Vertices of J(n,k) are the k-subsets of {1..n}, identified by their rank
 * in lexicographic order of sorted tuples, so (1,2,...,k) has rank 0. Two
 * vertices are adjacent when their subsets share exactly k-1 elements.
 *
 * Each vertex owns d = k(n-k) edge slots, numbered by ascending neighbour
 * rank. Lackadaisical walks append one self-loop slot at index d.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace jwalk {

/// Sorted k-tuple with elements in [1..n].
using Subset = std::vector<int>;

/// Exact C(a, b); 0 when b > a. Throws OverflowError rather than wrapping.
[[nodiscard]] std::uint64_t binomial(std::uint64_t a, std::uint64_t b);

struct VertexId {
    std::uint64_t rank{0};

    friend auto operator<=>(const VertexId &, const VertexId &) = default;
};

class GraphSpec {
  public:
    /// Throws ValidationError unless 1 <= k and n >= 2k.
    GraphSpec(int n, int k);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int k() const noexcept { return k_; }
    /// N = C(n,k).
    [[nodiscard]] std::uint64_t vertex_count() const noexcept { return vertex_count_; }
    /// d = k(n-k).
    [[nodiscard]] std::uint64_t degree() const noexcept { return degree_; }

    friend bool operator==(const GraphSpec &, const GraphSpec &) = default;

  private:
    int n_;
    int k_;
    std::uint64_t vertex_count_;
    std::uint64_t degree_;
};

/// Directed coin direction at a vertex. slot < d is an edge, slot == d the
/// self-loop.
struct Arc {
    VertexId vertex;
    std::uint64_t slot{0};

    friend bool operator==(const Arc &, const Arc &) = default;
};

/// Lexicographic rank of a sorted k-subset. Throws ValidationError on a
/// malformed subset.
[[nodiscard]] VertexId rank_subset(const GraphSpec &spec, std::span<const int> subset);

[[nodiscard]] Subset unrank_subset(const GraphSpec &spec, VertexId id);

/// The d neighbours of `id`, ascending by rank. Slot s of `id` points at
/// element s of this list.
[[nodiscard]] std::vector<VertexId> neighbors(const GraphSpec &spec, VertexId id);

/// Flip-flop partner of an edge arc: (m -> u) becomes (u -> m).
/// Throws ContractViolation for the self-loop slot.
[[nodiscard]] Arc reverse_arc(const GraphSpec &spec, const Arc &arc);

/**
 * Precomputed adjacency and reverse-slot tables, one entry per edge arc
 * (vertex-major, slot-minor). Used by the walk engine; the free functions
 * above recompute everything on demand.
 */
class ArcTable {
  public:
    /// Largest N*d the table accepts.
    static constexpr std::uint64_t kMaxArcs = std::uint64_t{1} << 30;

    explicit ArcTable(const GraphSpec &spec);

    [[nodiscard]] const GraphSpec &spec() const noexcept { return spec_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }
    [[nodiscard]] std::size_t degree() const noexcept { return degree_; }

    [[nodiscard]] std::span<const std::uint32_t> neighbors_of(std::size_t vertex) const {
        return {neighbor_.data() + vertex * degree_, degree_};
    }
    /// Slot under which `vertex` appears in the neighbour list of
    /// neighbors_of(vertex)[slot].
    [[nodiscard]] std::span<const std::uint32_t> reverse_slots_of(std::size_t vertex) const {
        return {reverse_slot_.data() + vertex * degree_, degree_};
    }

    [[nodiscard]] Arc reverse(const Arc &arc) const;

  private:
    GraphSpec spec_;
    std::size_t vertex_count_;
    std::size_t degree_;
    std::vector<std::uint32_t> neighbor_;
    std::vector<std::uint32_t> reverse_slot_;
};

} // namespace jwalk
