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

#ifndef SUPERCHEQ_CIRCUIT_HPP
#define SUPERCHEQ_CIRCUIT_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "supercheq/errors.hpp"
#include "supercheq/gates.hpp"

namespace supercheq {

/// Ordered gate sequence over n qubits with optional layer boundaries.
/// layers[k] is the gate count after layer k, so layers is non-decreasing
/// and ends at gates.size(); depth in layers = layers.size().
struct Circuit {
    int n_qubits = 1;
    std::vector<Gate> gates;
    std::vector<std::size_t> layers;

    Circuit() = default;
    explicit Circuit(int n) : n_qubits(n) {}

    Circuit& add(Gate gate) {
        gates.push_back(std::move(gate));
        return *this;
    }

    /// Marks the end of a layer at the current gate count.
    Circuit& end_layer() {
        layers.push_back(gates.size());
        return *this;
    }

    std::size_t depth() const { return layers.size(); }

    void validate() const {
        require(n_qubits >= 1, "Circuit: n_qubits must be positive");
        for (const Gate& g : gates) validate_gate(g);
        if (!layers.empty()) {
            std::size_t prev = 0;
            for (std::size_t boundary : layers) {
                require(boundary >= prev && boundary <= gates.size(),
                        "Circuit: layer boundaries must partition the gate list");
                prev = boundary;
            }
            require(layers.back() == gates.size(),
                    "Circuit: final layer boundary must close the gate list");
        }
    }

    nlohmann::json to_json() const {
        nlohmann::json gs = nlohmann::json::array();
        for (const Gate& g : gates) {
            nlohmann::json jg;
            jg["kind"] = gate_kind_name(g.kind);
            jg["qubits"] = g.qubits;
            jg["params"] = g.params;
            if (g.has_matrix()) {
                nlohmann::json rows = nlohmann::json::array();
                for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
                    for (Eigen::Index c = 0; c < g.matrix.cols(); ++c) {
                        rows.push_back({g.matrix(r, c).real(), g.matrix(r, c).imag()});
                    }
                }
                jg["matrix"] = rows;
            }
            gs.push_back(std::move(jg));
        }
        nlohmann::json j;
        j["n_qubits"] = n_qubits;
        j["gates"] = std::move(gs);
        if (!layers.empty()) j["layers"] = layers;
        return j;
    }

    static Circuit from_json(const nlohmann::json& j) {
        Circuit c;
        c.n_qubits = j.at("n_qubits").get<int>();
        for (const auto& jg : j.at("gates")) {
            Gate g;
            g.kind = parse_kind(jg.at("kind").get<std::string>());
            g.qubits = jg.value("qubits", std::vector<int>{});
            g.params = jg.value("params", std::vector<double>{});
            if (jg.contains("matrix")) {
                const auto& flat = jg.at("matrix");
                std::size_t dim = 1;
                while (dim * dim < flat.size()) ++dim;
                require(dim * dim == flat.size(),
                        "Circuit: gate matrix payload must be square");
                g.matrix.resize(static_cast<Eigen::Index>(dim),
                                static_cast<Eigen::Index>(dim));
                std::size_t k = 0;
                for (std::size_t r = 0; r < dim; ++r) {
                    for (std::size_t col = 0; col < dim; ++col, ++k) {
                        g.matrix(static_cast<Eigen::Index>(r),
                                 static_cast<Eigen::Index>(col)) =
                            Complex(flat[k][0].get<double>(), flat[k][1].get<double>());
                    }
                }
            }
            c.gates.push_back(std::move(g));
        }
        if (j.contains("layers")) {
            c.layers = j.at("layers").get<std::vector<std::size_t>>();
        }
        c.validate();
        return c;
    }

private:
    static GateKind parse_kind(const std::string& name) {
        for (GateKind k : {GateKind::H, GateKind::S, GateKind::CZ, GateKind::CX,
                           GateKind::SWAP, GateKind::RZ, GateKind::GR, GateKind::U2,
                           GateKind::U4, GateKind::U}) {
            if (name == gate_kind_name(k)) return k;
        }
        throw ConfigError("Circuit: unknown gate kind '" + name + "'");
    }

    void validate_gate(const Gate& g) const {
        std::set<int> seen;
        for (int q : g.qubits) {
            require(q >= 0 && q < n_qubits, "Circuit: gate qubit index out of range");
            require(seen.insert(q).second, "Circuit: gate qubit indices must be distinct");
        }
        switch (g.kind) {
            case GateKind::H:
            case GateKind::S:
                require(g.qubits.size() == 1, "Circuit: 1-qubit gate arity");
                break;
            case GateKind::CZ:
            case GateKind::CX:
            case GateKind::SWAP:
                require(g.qubits.size() == 2, "Circuit: 2-qubit gate arity");
                break;
            case GateKind::RZ:
                require(g.qubits.size() == 1 && g.params.size() == 1,
                        "Circuit: RZ takes one qubit and one angle");
                break;
            case GateKind::GR:
                require(g.qubits.empty() && g.params.size() == 2,
                        "Circuit: GR is global with (theta, phi)");
                break;
            case GateKind::U2:
                require(g.qubits.size() == 1 && g.matrix.rows() == 2 &&
                            g.matrix.cols() == 2,
                        "Circuit: U2 takes one qubit and a 2x2 payload");
                require(unitarity_defect(g.matrix) < 1e-12,
                        "Circuit: U2 payload is not unitary");
                break;
            case GateKind::U4:
                require(g.qubits.size() == 2 && g.matrix.rows() == 4 &&
                            g.matrix.cols() == 4,
                        "Circuit: U4 takes two qubits and a 4x4 payload");
                require(unitarity_defect(g.matrix) < 1e-12,
                        "Circuit: U4 payload is not unitary");
                break;
            case GateKind::U: {
                const std::size_t k = g.qubits.size();
                require(k >= 1 && k <= 20, "Circuit: U arity out of range");
                const Eigen::Index dim = Eigen::Index{1} << k;
                require(g.matrix.rows() == dim && g.matrix.cols() == dim,
                        "Circuit: U payload dimension mismatch");
                require(unitarity_defect(g.matrix) < 1e-12,
                        "Circuit: U payload is not unitary");
                break;
            }
        }
    }
};

}  // namespace supercheq

#endif  // SUPERCHEQ_CIRCUIT_HPP
