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

#ifndef SUPERCHEQ_IE_HPP
#define SUPERCHEQ_IE_HPP

#include <cmath>
#include <cstddef>
#include <utility>

#include "supercheq/bits.hpp"
#include "supercheq/circuit.hpp"
#include "supercheq/errors.hpp"
#include "supercheq/gf2.hpp"
#include "supercheq/graph.hpp"

namespace supercheq {

/// Smallest vertex count whose strict lower triangle holds N bits:
/// n = ceil((sqrt(8N+1)+1)/2).
inline int qubits_for_file(std::size_t n_bits) {
    require(n_bits >= 1, "qubits_for_file: file must have at least 1 bit");
    const double raw = (std::sqrt(8.0 * static_cast<double>(n_bits) + 1.0) + 1.0) / 2.0;
    int n = static_cast<int>(std::ceil(raw - 1e-9));
    // Floating-point guardrails: enforce the defining inequalities exactly.
    auto capacity = [](int v) {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(v - 1) / 2;
    };
    while (capacity(n) < n_bits) ++n;
    while (n > 2 && capacity(n - 1) >= n_bits) --n;
    return n;
}

/// Maps bit index k of the file to its strict-lower-triangle slot (row, col),
/// enumerated row-major: (1,0),(2,0),(2,1),(3,0),...
inline std::pair<int, int> triangle_slot(std::size_t k) {
    // row is the largest r with r(r-1)/2 <= k.
    int row = static_cast<int>(
        std::floor((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0));
    auto first_of_row = [](int r) {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(r - 1) / 2;
    };
    while (first_of_row(row) > k) --row;
    while (first_of_row(row + 1) <= k) ++row;
    return {row, static_cast<int>(k - first_of_row(row))};
}

/// File bits fill the strict lower triangle row-major; 1 bits become edges.
inline Graph file_to_graph(const FileBits& file) {
    const int n = qubits_for_file(file.size());
    Graph g(n);
    for (std::size_t k = 0; k < file.size(); ++k) {
        if (!file.bit(k)) continue;
        const auto [i, j] = triangle_slot(k);
        g.set_edge(i, j, true);
    }
    return g;
}

/// Inverse of file_to_graph: reads the first N lower-triangle slots.
inline FileBits graph_to_file(const Graph& g, std::size_t n_bits) {
    require(n_bits >= 1, "graph_to_file: file must have at least 1 bit");
    const std::size_t cap =
        static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n - 1) / 2;
    require(n_bits <= cap, "graph_to_file: N exceeds graph capacity");
    FileBits out = FileBits::zeros(n_bits);
    for (std::size_t k = 0; k < n_bits; ++k) {
        const auto [i, j] = triangle_slot(k);
        if (g.has_edge(i, j)) out.set_bit(k, true);
    }
    return out;
}

/// |+>^n followed by CZ(i, j) per edge, row-major order.
inline Circuit graph_state_circuit(const Graph& g) {
    Circuit c;
    c.n_qubits = g.n;
    for (int q = 0; q < g.n; ++q) c.add(Gate::h(q));
    c.end_layer();
    for (const auto& [i, j] : g.edges()) c.add(Gate::cz(i, j));
    if (!g.edges().empty()) c.end_layer();
    return c;
}

/// Exact fidelity of two graph states. With D = A1 xor A2 and the quadratic
/// form q(x) = sum_{i<j} D_ij x_i x_j, the overlap is a GF(2) Gauss sum:
/// zero when q is nonzero somewhere on ker(D), else 2^(-rank(D)).
inline double graph_fidelity(const Graph& a, const Graph& b) {
    require(a.n == b.n, "graph_fidelity: vertex counts differ (resize first)");
    const BitMatrix d = a.adjacency ^ b.adjacency;
    const BitMatrix kernel = gf2_nullspace(d);
    for (int r = 0; r < kernel.rows(); ++r) {
        int q = 0;
        for (int i = 0; i < d.cols(); ++i) {
            if (!kernel.at(r, i)) continue;
            for (int j = 0; j < i; ++j) {
                if (kernel.at(r, j) && d.at(i, j)) q ^= 1;
            }
        }
        if (q) return 0.0;  // orthogonal graph states
    }
    return std::ldexp(1.0, -gf2_rank(d));
}

/// A graph-state fingerprint that remembers the source file length, so
/// single-bit edits and growth are O(1) graph updates.
struct GraphFingerprint {
    Graph graph;
    std::size_t file_length = 0;

    static GraphFingerprint encode(const FileBits& file) {
        return {file_to_graph(file), file.size()};
    }

    FileBits decode() const { return graph_to_file(graph, file_length); }

    bool operator==(const GraphFingerprint& other) const = default;
};

/// Toggles one file bit: exactly one edge toggled, O(1).
inline GraphFingerprint flip_bit(GraphFingerprint fp, std::size_t index) {
    require(index < fp.file_length, "flip_bit: index out of range");
    const auto [i, j] = triangle_slot(index);
    fp.graph.toggle_edge(i, j);
    return fp;
}

/// Sets one file bit to `value` (toggles only when it differs); idempotent.
inline GraphFingerprint write_bit(GraphFingerprint fp, std::size_t index,
                                  bool value) {
    require(index < fp.file_length, "write_bit: index out of range");
    const auto [i, j] = triangle_slot(index);
    if (fp.graph.has_edge(i, j) != value) fp.graph.toggle_edge(i, j);
    return fp;
}

/// Grows the fingerprint to a longer file; new bits default to 0 and the
/// old adjacency embeds in the top-left block. Shrinking is unsupported.
inline GraphFingerprint resize(GraphFingerprint fp, std::size_t new_length) {
    require(new_length >= fp.file_length, "resize: shrinking is unsupported");
    const int new_n = qubits_for_file(new_length);
    if (new_n > fp.graph.n) {
        Graph grown(new_n);
        for (const auto& [i, j] : fp.graph.edges()) grown.set_edge(i, j, true);
        fp.graph = std::move(grown);
    }
    fp.file_length = new_length;
    return fp;
}

}  // namespace supercheq

#endif  // SUPERCHEQ_IE_HPP
