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

#ifndef SUPERCHEQ_GATES_HPP
#define SUPERCHEQ_GATES_HPP

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "supercheq/errors.hpp"

namespace supercheq {

using Complex = std::complex<double>;

enum class GateKind { H, S, CZ, CX, SWAP, RZ, GR, U2, U4, U };

inline const char* gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::CZ: return "cz";
        case GateKind::CX: return "cx";
        case GateKind::SWAP: return "swap";
        case GateKind::RZ: return "rz";
        case GateKind::GR: return "gr";
        case GateKind::U2: return "u2";
        case GateKind::U4: return "u4";
        case GateKind::U: return "u";
    }
    throw InvariantError("gate_kind_name: unknown kind");
}

/// Largest deviation of U†U from the identity, by max entry magnitude.
inline double unitarity_defect(const Eigen::MatrixXcd& u) {
    const Eigen::MatrixXcd g = u.adjoint() * u;
    const Eigen::MatrixXcd i = Eigen::MatrixXcd::Identity(u.cols(), u.cols());
    return (g - i).cwiseAbs().maxCoeff();
}

/// One gate of a circuit. Qubit order convention for multi-qubit payloads:
/// qubits[0] is the *least significant* local basis bit of the matrix, so a
/// U4 on (a, b) acts on local index ((x>>a)&1) | (((x>>b)&1)<<1).
/// GR is global (applies to every qubit) and carries no explicit indices.
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<int> qubits;     // empty for the global GR
    std::vector<double> params;  // RZ: {theta}; GR: {theta, phi}
    Eigen::MatrixXcd matrix;     // payload for U2 / U4 / U only

    static Gate h(int q) { return {GateKind::H, {q}, {}, {}}; }
    static Gate s(int q) { return {GateKind::S, {q}, {}, {}}; }
    static Gate cz(int i, int j) { return {GateKind::CZ, {i, j}, {}, {}}; }
    static Gate cx(int control, int target) {
        return {GateKind::CX, {control, target}, {}, {}};
    }
    static Gate swap(int i, int j) { return {GateKind::SWAP, {i, j}, {}, {}}; }
    static Gate rz(int q, double theta) { return {GateKind::RZ, {q}, {theta}, {}}; }
    static Gate gr(double theta, double phi) {
        return {GateKind::GR, {}, {theta, phi}, {}};
    }
    static Gate u2(int q, const Eigen::Matrix2cd& u) {
        return {GateKind::U2, {q}, {}, u};
    }
    static Gate u4(int low, int high, const Eigen::Matrix4cd& u) {
        return {GateKind::U4, {low, high}, {}, u};
    }
    static Gate unitary(std::vector<int> qs, Eigen::MatrixXcd u) {
        return {GateKind::U, std::move(qs), {}, std::move(u)};
    }

    bool has_matrix() const {
        return kind == GateKind::U2 || kind == GateKind::U4 || kind == GateKind::U;
    }

    /// Number of qubits the gate touches; 0 encodes "all" (global GR).
    std::size_t arity() const {
        return kind == GateKind::GR ? 0 : qubits.size();
    }
};

/// Per-qubit 2x2 factor of GR(theta, phi) =
/// exp(-i (theta/2) sum_j (cos(phi) X_j + sin(phi) Y_j)).
inline Eigen::Matrix2cd gr_single_qubit(double theta, double phi) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd m;
    m << Complex(c, 0.0), -i * s * std::exp(-i * phi),
         -i * s * std::exp(i * phi), Complex(c, 0.0);
    return m;
}

inline Eigen::Matrix2cd h_matrix() {
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    m << r, r, r, -r;
    return m;
}

inline Eigen::Matrix2cd s_matrix() {
    Eigen::Matrix2cd m;
    m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 1);
    return m;
}

inline Eigen::Matrix2cd rz_matrix(double theta) {
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd m;
    m << std::exp(-i * (theta / 2.0)), Complex(0, 0),
         Complex(0, 0), std::exp(i * (theta / 2.0));
    return m;
}

}  // namespace supercheq

#endif  // SUPERCHEQ_GATES_HPP
