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

#ifndef SUPERCHEQ_DENSITY_HPP
#define SUPERCHEQ_DENSITY_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "supercheq/circuit.hpp"
#include "supercheq/errors.hpp"
#include "supercheq/gates.hpp"
#include "supercheq/statevector.hpp"

namespace supercheq {

/// Tagged description of the simulated error channel applied after every
/// gate to each participating qubit.
struct NoiseModel {
    enum class Kind { None, Pauli, Thermal, Coherent };

    Kind kind = Kind::None;

    // Pauli: stochastic X/Y/Z with these probabilities.
    double p_x = 0.0, p_y = 0.0, p_z = 0.0;

    // Thermal: relaxation/dephasing times (microseconds) and gate
    // durations (nanoseconds).
    double t1_us = 0.0, t2_us = 0.0, t_1q_ns = 0.0, t_2q_ns = 0.0;

    // Coherent: probability p of a +/- delta over/under-rotation about the
    // gate's generator axis (p/2 each way).
    double p = 0.0, delta = 0.0;

    static NoiseModel none() { return {}; }

    static NoiseModel pauli(double px, double py, double pz) {
        NoiseModel m;
        m.kind = Kind::Pauli;
        m.p_x = px;
        m.p_y = py;
        m.p_z = pz;
        m.validate();
        return m;
    }

    static NoiseModel thermal(double t1_us, double t2_us, double t_1q_ns,
                              double t_2q_ns) {
        NoiseModel m;
        m.kind = Kind::Thermal;
        m.t1_us = t1_us;
        m.t2_us = t2_us;
        m.t_1q_ns = t_1q_ns;
        m.t_2q_ns = t_2q_ns;
        m.validate();
        return m;
    }

    static NoiseModel coherent(double p, double delta) {
        NoiseModel m;
        m.kind = Kind::Coherent;
        m.p = p;
        m.delta = delta;
        m.validate();
        return m;
    }

    /// Superconducting-calibration defaults used by the reproduction runs.
    static NoiseModel pauli_default() { return pauli(0.001, 0.003, 0.001); }
    static NoiseModel thermal_default() { return thermal(50.0, 70.0, 100.0, 300.0); }
    static NoiseModel coherent_default() {
        return coherent(0.01, std::numbers::pi / 6.0);
    }

    void validate() const {
        switch (kind) {
            case Kind::None:
                break;
            case Kind::Pauli:
                require(p_x >= 0 && p_y >= 0 && p_z >= 0 && p_x + p_y + p_z <= 1.0,
                        "NoiseModel: Pauli probabilities must be in [0,1] and sum <= 1");
                break;
            case Kind::Thermal:
                require(t1_us > 0 && t2_us > 0 && t_1q_ns >= 0 && t_2q_ns >= 0,
                        "NoiseModel: thermal times must be positive");
                require(t2_us <= 2.0 * t1_us,
                        "NoiseModel: T2 <= 2*T1 required for a valid channel");
                break;
            case Kind::Coherent:
                require(p >= 0 && p <= 1, "NoiseModel: probability must be in [0,1]");
                break;
        }
    }

    const char* name() const {
        switch (kind) {
            case Kind::None: return "none";
            case Kind::Pauli: return "pauli";
            case Kind::Thermal: return "thermal";
            case Kind::Coherent: return "coherent";
        }
        return "?";
    }
};

inline Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

inline Eigen::Matrix2cd pauli_y() {
    const Complex i(0, 1);
    Eigen::Matrix2cd m;
    m << Complex(0, 0), -i, i, Complex(0, 0);
    return m;
}

inline Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

/// Rotation by `angle` about the Bloch axis (ax, ay, az), unit normalized.
inline Eigen::Matrix2cd axis_rotation(double ax, double ay, double az, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const Complex i(0, 1);
    const Eigen::Matrix2cd h = ax * pauli_x() + ay * pauli_y() + az * pauli_z();
    return c * Eigen::Matrix2cd::Identity() - i * s * h;
}

/// Dense density-matrix simulator (kets index rows, bras index columns).
/// Same little-endian qubit convention as StateVector. Capacity is capped
/// at 10 qubits (a 1024x1024 complex matrix).
class DensityMatrix {
public:
    static constexpr int kMaxQubits = 10;

    static DensityMatrix zero_state(int n_qubits) {
        require(n_qubits >= 1, "DensityMatrix: n_qubits must be positive");
        require_capacity(n_qubits <= kMaxQubits,
                         "DensityMatrix: capacity is 10 qubits");
        DensityMatrix d;
        d.n_ = n_qubits;
        const Eigen::Index dim = Eigen::Index{1} << n_qubits;
        d.rho_ = Eigen::MatrixXcd::Zero(dim, dim);
        d.rho_(0, 0) = 1.0;
        return d;
    }

    static DensityMatrix from_pure(const StateVector& psi) {
        require_capacity(psi.n_qubits() <= kMaxQubits,
                         "DensityMatrix: capacity is 10 qubits");
        DensityMatrix d;
        d.n_ = psi.n_qubits();
        d.rho_ = psi.amplitudes() * psi.amplitudes().adjoint();
        return d;
    }

    int n_qubits() const { return n_; }
    Eigen::Index dim() const { return rho_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return rho_; }

    double trace() const { return rho_.trace().real(); }
    double purity() const { return (rho_ * rho_).trace().real(); }

    double hermiticity_defect() const {
        return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    }

    double min_eigenvalue() const {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitized());
        return es.eigenvalues().minCoeff();
    }

    /// SWAP-test overlap tr(rho sigma); equals |<a|b>|^2 for pure inputs.
    double swap_overlap(const DensityMatrix& other) const {
        require(n_ == other.n_, "DensityMatrix: qubit count mismatch");
        return rho_.cwiseProduct(other.rho_.transpose()).sum().real();
    }

    /// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
    double uhlmann_fidelity(const DensityMatrix& other) const {
        require(n_ == other.n_, "DensityMatrix: qubit count mismatch");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitized());
        Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
        const Eigen::MatrixXcd sqrt_rho = es.eigenvectors() *
                                          ev.cwiseSqrt().asDiagonal() *
                                          es.eigenvectors().adjoint();
        Eigen::MatrixXcd inner = sqrt_rho * other.hermitized() * sqrt_rho;
        inner = 0.5 * (inner + inner.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es2(inner);
        const double t = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
        return t * t;
    }

    void apply_gate(const Gate& g) {
        switch (g.kind) {
            case GateKind::H:
                apply_1q(g.qubits[0], h_matrix());
                break;
            case GateKind::S:
                apply_1q(g.qubits[0], s_matrix());
                break;
            case GateKind::RZ:
                apply_1q(g.qubits[0], rz_matrix(g.params[0]));
                break;
            case GateKind::GR: {
                const Eigen::Matrix2cd m = gr_single_qubit(g.params[0], g.params[1]);
                for (int q = 0; q < n_; ++q) apply_1q(q, m);
                break;
            }
            case GateKind::U2:
                apply_1q(g.qubits[0], g.matrix);
                break;
            case GateKind::CZ:
            case GateKind::CX:
            case GateKind::SWAP:
            case GateKind::U4:
            case GateKind::U:
                apply_dense(g.qubits, dense_matrix_for(g));
                break;
        }
    }

    /// rho <- sum_k K_k rho K_k^dagger for 2x2 Kraus operators on qubit q.
    void apply_kraus_1q(int q, const std::vector<Eigen::Matrix2cd>& kraus) {
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho_.rows(), rho_.cols());
        for (const Eigen::Matrix2cd& k : kraus) {
            Eigen::MatrixXcd term = rho_;
            left_1q(term, q, k);
            right_1q(term, q, k);
            out += term;
        }
        rho_ = std::move(out);
    }

private:
    Eigen::MatrixXcd hermitized() const { return 0.5 * (rho_ + rho_.adjoint()); }

    static Eigen::MatrixXcd dense_matrix_for(const Gate& g) {
        if (g.kind == GateKind::U4 || g.kind == GateKind::U) return g.matrix;
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
        switch (g.kind) {
            case GateKind::CZ:
                m(3, 3) = -1;
                break;
            case GateKind::CX:
                // qubits[0] = control (local bit 0), qubits[1] = target.
                m.setZero();
                m(0, 0) = 1;
                m(3, 1) = 1;
                m(2, 2) = 1;
                m(1, 3) = 1;
                break;
            case GateKind::SWAP:
                m.setZero();
                m(0, 0) = 1;
                m(2, 1) = 1;
                m(1, 2) = 1;
                m(3, 3) = 1;
                break;
            default:
                throw InvariantError("dense_matrix_for: unexpected kind");
        }
        return m;
    }

    void apply_1q(int q, const Eigen::Matrix2cd& m) {
        left_1q(rho_, q, m);
        right_1q(rho_, q, m);
    }

    void apply_dense(const std::vector<int>& qubits, const Eigen::MatrixXcd& m) {
        left_dense(rho_, qubits, m);
        right_dense(rho_, qubits, m);
    }

    // rho <- (M over ket index) rho : transform row pairs.
    static void left_1q(Eigen::MatrixXcd& rho, int q, const Eigen::Matrix2cd& m) {
        const Eigen::Index step = Eigen::Index{1} << q;
        for (Eigen::Index base = 0; base < rho.rows(); base += 2 * step) {
            for (Eigen::Index low = 0; low < step; ++low) {
                const Eigen::Index r0 = base + low;
                const Eigen::Index r1 = r0 + step;
                const Eigen::RowVectorXcd a = rho.row(r0);
                const Eigen::RowVectorXcd b = rho.row(r1);
                rho.row(r0) = m(0, 0) * a + m(0, 1) * b;
                rho.row(r1) = m(1, 0) * a + m(1, 1) * b;
            }
        }
    }

    // rho <- rho (M over bra index)^dagger : transform column pairs.
    static void right_1q(Eigen::MatrixXcd& rho, int q, const Eigen::Matrix2cd& m) {
        const Eigen::Index step = Eigen::Index{1} << q;
        for (Eigen::Index base = 0; base < rho.cols(); base += 2 * step) {
            for (Eigen::Index low = 0; low < step; ++low) {
                const Eigen::Index c0 = base + low;
                const Eigen::Index c1 = c0 + step;
                const Eigen::VectorXcd a = rho.col(c0);
                const Eigen::VectorXcd b = rho.col(c1);
                rho.col(c0) = std::conj(m(0, 0)) * a + std::conj(m(0, 1)) * b;
                rho.col(c1) = std::conj(m(1, 0)) * a + std::conj(m(1, 1)) * b;
            }
        }
    }

    static void left_dense(Eigen::MatrixXcd& rho, const std::vector<int>& qubits,
                           const Eigen::MatrixXcd& m) {
        const std::size_t k = qubits.size();
        const Eigen::Index block = Eigen::Index{1} << k;
        Eigen::Index mask = 0;
        for (int q : qubits) mask |= Eigen::Index{1} << q;
        std::vector<Eigen::Index> rows(static_cast<std::size_t>(block));
        Eigen::MatrixXcd local(block, rho.cols());
        for (Eigen::Index x = 0; x < rho.rows(); ++x) {
            if (x & mask) continue;
            for (Eigen::Index v = 0; v < block; ++v) {
                Eigen::Index y = x;
                for (std::size_t j = 0; j < k; ++j) {
                    if ((v >> j) & 1) y |= Eigen::Index{1} << qubits[j];
                }
                rows[static_cast<std::size_t>(v)] = y;
                local.row(v) = rho.row(y);
            }
            local = m * local;
            for (Eigen::Index v = 0; v < block; ++v) {
                rho.row(rows[static_cast<std::size_t>(v)]) = local.row(v);
            }
        }
    }

    static void right_dense(Eigen::MatrixXcd& rho, const std::vector<int>& qubits,
                            const Eigen::MatrixXcd& m) {
        const std::size_t k = qubits.size();
        const Eigen::Index block = Eigen::Index{1} << k;
        Eigen::Index mask = 0;
        for (int q : qubits) mask |= Eigen::Index{1} << q;
        const Eigen::MatrixXcd mh = m.adjoint();
        std::vector<Eigen::Index> cols(static_cast<std::size_t>(block));
        Eigen::MatrixXcd local(rho.rows(), block);
        for (Eigen::Index x = 0; x < rho.cols(); ++x) {
            if (x & mask) continue;
            for (Eigen::Index v = 0; v < block; ++v) {
                Eigen::Index y = x;
                for (std::size_t j = 0; j < k; ++j) {
                    if ((v >> j) & 1) y |= Eigen::Index{1} << qubits[j];
                }
                cols[static_cast<std::size_t>(v)] = y;
                local.col(v) = rho.col(y);
            }
            local = local * mh;
            for (Eigen::Index v = 0; v < block; ++v) {
                rho.col(cols[static_cast<std::size_t>(v)]) = local.col(v);
            }
        }
    }

    int n_ = 0;
    Eigen::MatrixXcd rho_;
};

namespace detail {

/// Kraus set of the configured channel for one qubit of one gate.
/// `axis` is the gate's generator axis, used by the coherent model.
inline std::vector<Eigen::Matrix2cd> channel_kraus(const NoiseModel& noise,
                                                   double duration_ns,
                                                   const std::array<double, 3>& axis) {
    std::vector<Eigen::Matrix2cd> kraus;
    switch (noise.kind) {
        case NoiseModel::Kind::None:
            break;
        case NoiseModel::Kind::Pauli: {
            const double p0 = 1.0 - noise.p_x - noise.p_y - noise.p_z;
            kraus.push_back(std::sqrt(p0) * Eigen::Matrix2cd::Identity());
            kraus.push_back(std::sqrt(noise.p_x) * pauli_x());
            kraus.push_back(std::sqrt(noise.p_y) * pauli_y());
            kraus.push_back(std::sqrt(noise.p_z) * pauli_z());
            break;
        }
        case NoiseModel::Kind::Thermal: {
            // Amplitude damping from T1, then just enough extra pure
            // dephasing that the total off-diagonal factor is exp(-t/T2).
            const double t_us = duration_ns * 1e-3;
            const double gamma = 1.0 - std::exp(-t_us / noise.t1_us);
            Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero();
            k0(0, 0) = 1.0;
            k0(1, 1) = std::sqrt(1.0 - gamma);
            Eigen::Matrix2cd k1 = Eigen::Matrix2cd::Zero();
            k1(0, 1) = std::sqrt(gamma);
            const double residual =
                std::exp(-t_us * (1.0 / noise.t2_us - 0.5 / noise.t1_us));
            const double q = (1.0 - residual) / 2.0;
            // Compose (dephase after damp): 2 x 2 = 4 Kraus operators.
            for (const auto& damp : {k0, k1}) {
                kraus.push_back(std::sqrt(1.0 - q) * damp);
                kraus.push_back(std::sqrt(q) * (pauli_z() * damp));
            }
            break;
        }
        case NoiseModel::Kind::Coherent: {
            const Eigen::Matrix2cd over =
                axis_rotation(axis[0], axis[1], axis[2], noise.delta);
            const Eigen::Matrix2cd under =
                axis_rotation(axis[0], axis[1], axis[2], -noise.delta);
            kraus.push_back(std::sqrt(1.0 - noise.p) * Eigen::Matrix2cd::Identity());
            kraus.push_back(std::sqrt(noise.p / 2.0) * over);
            kraus.push_back(std::sqrt(noise.p / 2.0) * under);
            break;
        }
    }
    return kraus;
}

inline std::array<double, 3> gate_axis(const Gate& g) {
    if (g.kind == GateKind::GR) {
        return {std::cos(g.params[1]), std::sin(g.params[1]), 0.0};
    }
    return {0.0, 0.0, 1.0};  // phase-type error for everything else
}

inline double gate_duration_ns(const Gate& g, const NoiseModel& noise) {
    const bool two_qubit = g.arity() >= 2;
    return two_qubit ? noise.t_2q_ns : noise.t_1q_ns;
}

inline std::vector<int> participating_qubits(const Gate& g, int n_qubits) {
    if (g.kind == GateKind::GR) {
        std::vector<int> all(static_cast<std::size_t>(n_qubits));
        for (int q = 0; q < n_qubits; ++q) all[static_cast<std::size_t>(q)] = q;
        return all;
    }
    return g.qubits;
}

}  // namespace detail

/// Simulates the circuit on |0...0><0...0| with the channel applied to every
/// participating qubit after each gate.
inline DensityMatrix run_noisy(const Circuit& circuit, const NoiseModel& noise) {
    noise.validate();
    circuit.validate();
    DensityMatrix rho = DensityMatrix::zero_state(circuit.n_qubits);
    for (const Gate& g : circuit.gates) {
        rho.apply_gate(g);
        if (noise.kind == NoiseModel::Kind::None) continue;
        const auto kraus = detail::channel_kraus(
            noise, detail::gate_duration_ns(g, noise), detail::gate_axis(g));
        for (int q : detail::participating_qubits(g, circuit.n_qubits)) {
            rho.apply_kraus_1q(q, kraus);
        }
        check_invariant(std::abs(rho.trace() - 1.0) < 1e-9,
                        "run_noisy: trace drift exceeded tolerance");
    }
    return rho;
}

}  // namespace supercheq

#endif  // SUPERCHEQ_DENSITY_HPP
