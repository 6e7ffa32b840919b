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
#include "jwalk/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "jwalk/error.hpp"

namespace jwalk {

__extension__ using Wide = unsigned __int128;

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) {
        return 0;
    }
    b = std::min(b, a - b);
    // C(a-b+i, i) is an integer at every step, so the division is exact.
    Wide result = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        result = result * (a - b + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            throw OverflowError("binomial(" + std::to_string(a) + ", " + std::to_string(b) +
                                ") does not fit in 64 bits");
        }
    }
    return static_cast<std::uint64_t>(result);
}

namespace {

// Pascal triangle rows 0..n, columns 0..k.
class PascalTable {
  public:
    PascalTable(int n, int k) : cols_(static_cast<std::size_t>(k) + 1) {
        table_.assign((static_cast<std::size_t>(n) + 1) * cols_, 0);
        for (int a = 0; a <= n; ++a) {
            for (int b = 0; b <= std::min(a, k); ++b) {
                table_[static_cast<std::size_t>(a) * cols_ + static_cast<std::size_t>(b)] =
                    binomial(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
            }
        }
    }

    [[nodiscard]] std::uint64_t operator()(int a, int b) const {
        if (a < 0 || b < 0 || static_cast<std::size_t>(b) >= cols_) {
            return 0;
        }
        return table_[static_cast<std::size_t>(a) * cols_ + static_cast<std::size_t>(b)];
    }

  private:
    std::size_t cols_;
    std::vector<std::uint64_t> table_;
};

void validate_subset(const GraphSpec &spec, std::span<const int> subset) {
    if (subset.size() != static_cast<std::size_t>(spec.k())) {
        throw ValidationError("subset has " + std::to_string(subset.size()) +
                              " elements, expected k = " + std::to_string(spec.k()));
    }
    int previous = 0;
    for (const int element : subset) {
        if (element < 1 || element > spec.n()) {
            throw ValidationError("subset element " + std::to_string(element) +
                                  " outside [1, " + std::to_string(spec.n()) + "]");
        }
        if (element <= previous) {
            throw ValidationError("subset must be strictly increasing");
        }
        previous = element;
    }
}

void validate_vertex(const GraphSpec &spec, VertexId id) {
    if (id.rank >= spec.vertex_count()) {
        throw ValidationError("vertex rank " + std::to_string(id.rank) + " outside [0, " +
                              std::to_string(spec.vertex_count()) + ")");
    }
}

// Sum over positions i of the number of tuples that agree on the prefix
// and carry a smaller element at i.
std::uint64_t rank_with(const PascalTable &choose, int n, std::span<const int> subset) {
    const int k = static_cast<int>(subset.size());
    std::uint64_t rank = 0;
    int previous = 0;
    for (int i = 0; i < k; ++i) {
        for (int x = previous + 1; x < subset[static_cast<std::size_t>(i)]; ++x) {
            rank += choose(n - x, k - i - 1);
        }
        previous = subset[static_cast<std::size_t>(i)];
    }
    return rank;
}

Subset unrank_with(const PascalTable &choose, int n, int k, std::uint64_t rank) {
    Subset subset;
    subset.reserve(static_cast<std::size_t>(k));
    int x = 1;
    for (int i = 0; i < k; ++i) {
        for (;; ++x) {
            const std::uint64_t block = choose(n - x, k - i - 1);
            if (rank < block) {
                break;
            }
            rank -= block;
        }
        subset.push_back(x);
        ++x;
    }
    return subset;
}

// Neighbour ranks of `subset`, unsorted: swap one member for one non-member.
void collect_neighbors(const PascalTable &choose, int n, const Subset &subset,
                       std::vector<std::uint64_t> &out) {
    out.clear();
    std::vector<char> member(static_cast<std::size_t>(n) + 1, 0);
    for (const int e : subset) {
        member[static_cast<std::size_t>(e)] = 1;
    }
    Subset swapped(subset.size());
    for (std::size_t drop = 0; drop < subset.size(); ++drop) {
        for (int add = 1; add <= n; ++add) {
            if (member[static_cast<std::size_t>(add)] != 0) {
                continue;
            }
            swapped = subset;
            swapped[drop] = add;
            std::sort(swapped.begin(), swapped.end());
            out.push_back(rank_with(choose, n, swapped));
        }
    }
}

} // namespace

GraphSpec::GraphSpec(int n, int k) : n_(n), k_(k), vertex_count_(0), degree_(0) {
    if (k < 1) {
        throw ValidationError("graph parameter k must be >= 1, got " + std::to_string(k));
    }
    if (n < 2 * k) {
        throw ValidationError("graph J(" + std::to_string(n) + "," + std::to_string(k) +
                              ") requires n >= 2k");
    }
    vertex_count_ = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
    degree_ = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n - k);
}

VertexId rank_subset(const GraphSpec &spec, std::span<const int> subset) {
    validate_subset(spec, subset);
    const PascalTable choose(spec.n(), spec.k());
    return VertexId{rank_with(choose, spec.n(), subset)};
}

Subset unrank_subset(const GraphSpec &spec, VertexId id) {
    validate_vertex(spec, id);
    const PascalTable choose(spec.n(), spec.k());
    return unrank_with(choose, spec.n(), spec.k(), id.rank);
}

std::vector<VertexId> neighbors(const GraphSpec &spec, VertexId id) {
    validate_vertex(spec, id);
    const PascalTable choose(spec.n(), spec.k());
    std::vector<std::uint64_t> ranks;
    collect_neighbors(choose, spec.n(), unrank_with(choose, spec.n(), spec.k(), id.rank), ranks);
    std::sort(ranks.begin(), ranks.end());
    std::vector<VertexId> out;
    out.reserve(ranks.size());
    for (const auto r : ranks) {
        out.push_back(VertexId{r});
    }
    return out;
}

Arc reverse_arc(const GraphSpec &spec, const Arc &arc) {
    validate_vertex(spec, arc.vertex);
    if (arc.slot >= spec.degree()) {
        throw ContractViolation("reverse_arc: slot " + std::to_string(arc.slot) +
                                " is not an edge slot (degree " +
                                std::to_string(spec.degree()) + ")");
    }
    const VertexId target = neighbors(spec, arc.vertex)[arc.slot];
    const auto back = neighbors(spec, target);
    const auto it = std::lower_bound(back.begin(), back.end(), arc.vertex);
    return Arc{target, static_cast<std::uint64_t>(it - back.begin())};
}

ArcTable::ArcTable(const GraphSpec &spec)
    : spec_(spec), vertex_count_(static_cast<std::size_t>(spec.vertex_count())),
      degree_(static_cast<std::size_t>(spec.degree())) {
    if (spec.vertex_count() > kMaxArcs / spec.degree()) {
        throw ValidationError("graph J(" + std::to_string(spec.n()) + "," +
                              std::to_string(spec.k()) + ") has too many arcs to tabulate");
    }
    const std::size_t arcs = vertex_count_ * degree_;
    neighbor_.resize(arcs);
    reverse_slot_.resize(arcs);

    const PascalTable choose(spec.n(), spec.k());
    std::vector<std::uint64_t> ranks;
    for (std::size_t v = 0; v < vertex_count_; ++v) {
        collect_neighbors(choose, spec.n(), unrank_with(choose, spec.n(), spec.k(), v), ranks);
        std::sort(ranks.begin(), ranks.end());
        std::copy(ranks.begin(), ranks.end(), neighbor_.begin() + static_cast<std::ptrdiff_t>(v * degree_));
    }
    for (std::size_t v = 0; v < vertex_count_; ++v) {
        for (std::size_t s = 0; s < degree_; ++s) {
            const auto back = neighbors_of(neighbor_[v * degree_ + s]);
            const auto it = std::lower_bound(back.begin(), back.end(), static_cast<std::uint32_t>(v));
            reverse_slot_[v * degree_ + s] = static_cast<std::uint32_t>(it - back.begin());
        }
    }
}

Arc ArcTable::reverse(const Arc &arc) const {
    if (arc.vertex.rank >= vertex_count_) {
        throw ValidationError("vertex rank " + std::to_string(arc.vertex.rank) + " out of range");
    }
    if (arc.slot >= degree_) {
        throw ContractViolation("reverse: slot " + std::to_string(arc.slot) +
                                " is not an edge slot");
    }
    const std::size_t i = static_cast<std::size_t>(arc.vertex.rank) * degree_ + arc.slot;
    return Arc{VertexId{neighbor_[i]}, reverse_slot_[i]};
}

} // namespace jwalk
