// Copyright 2026 The supercheq-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERCHEQ_GRAPH_HPP
#define SUPERCHEQ_GRAPH_HPP

#include <utility>
#include <vector>

#include "supercheq/bits.hpp"
#include "supercheq/errors.hpp"
#include "supercheq/gf2.hpp"
#include "supercheq/json.hpp"

namespace supercheq {

/// Simple undirected graph as a symmetric zero-diagonal bit matrix.
struct Graph {
    int n = 0;
    BitMatrix adjacency;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adjacency(vertices, vertices) {
        require(vertices >= 0, "Graph: negative vertex count");
    }

    bool has_edge(int i, int j) const {
        check_bounds(i, j);
        return adjacency.at(i, j);
    }

    void set_edge(int i, int j, bool present) {
        check_bounds(i, j);
        require(i != j, "Graph: no self loops");
        adjacency.set(i, j, present);
        adjacency.set(j, i, present);
    }

    void toggle_edge(int i, int j) {
        check_bounds(i, j);
        require(i != j, "Graph: no self loops");
        adjacency.flip(i, j);
        adjacency.flip(j, i);
    }

    /// Strict-lower-triangle edges in row-major order: (1,0),(2,0),(2,1),...
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                if (adjacency.at(i, j)) out.emplace_back(i, j);
            }
        }
        return out;
    }

    std::size_t edge_count() const { return edges().size(); }

    void validate() const {
        for (int i = 0; i < n; ++i) {
            check_invariant(!adjacency.at(i, i), "Graph: nonzero diagonal");
            for (int j = 0; j < i; ++j) {
                check_invariant(adjacency.at(i, j) == adjacency.at(j, i),
                                "Graph: adjacency not symmetric");
            }
        }
    }

    bool operator==(const Graph& other) const = default;

    nlohmann::json to_json() const {
        std::vector<std::vector<int>> edge_list;
        for (const auto& [i, j] : edges()) edge_list.push_back({i, j});
        return nlohmann::json{{"n", n}, {"edges", edge_list}};
    }

    static Graph from_json(const nlohmann::json& j) {
        require(j.contains("n") && j.contains("edges"),
                "Graph: JSON needs 'n' and 'edges'");
        Graph g(j.at("n").get<int>());
        for (const auto& e : j.at("edges")) {
            require(e.is_array() && e.size() == 2, "Graph: edge must be a pair");
            g.set_edge(e[0].get<int>(), e[1].get<int>(), true);
        }
        return g;
    }

    /// Lower triangle packed row-major into bytes (MSB-first, byte aligned);
    /// the compact on-disk form for large graphs.
    std::vector<std::uint8_t> to_packed_bytes() const {
        const std::size_t cap =
            static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
        if (cap == 0) return {};
        FileBits bits = FileBits::zeros(cap);
        std::size_t idx = 0;
        for (int i = 1; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                bits.set_bit(idx++, adjacency.at(i, j));
            }
        }
        return bits.bytes();
    }

    static Graph from_packed_bytes(int n, const std::vector<std::uint8_t>& bytes) {
        require(n >= 0, "Graph: negative vertex count");
        const std::size_t cap =
            static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
        require(bytes.size() == (cap + 7) / 8,
                "Graph: packed byte length does not match vertex count");
        if (cap == 0) return Graph(n);
        const FileBits bits = FileBits::from_bytes(bytes, cap);
        Graph g(n);
        std::size_t idx = 0;
        for (int i = 1; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                if (bits.bit(idx++)) g.set_edge(i, j, true);
            }
        }
        return g;
    }

private:
    void check_bounds(int i, int j) const {
        require(i >= 0 && i < n && j >= 0 && j < n, "Graph: vertex out of range");
    }
};

/// Entries that differ between two same-size adjacency matrices, counted as
/// undirected edges.
inline int edges_toggled(const Graph& a, const Graph& b) {
    check_invariant(a.n == b.n, "edges_toggled: size mismatch");
    int count = 0;
    for (int i = 1; i < a.n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (a.has_edge(i, j) != b.has_edge(i, j)) ++count;
        }
    }
    return count;
}

}  // namespace supercheq

#endif  // SUPERCHEQ_GRAPH_HPP
