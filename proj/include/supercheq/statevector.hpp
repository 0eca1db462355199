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

#ifndef SUPERCHEQ_STATEVECTOR_HPP
#define SUPERCHEQ_STATEVECTOR_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "supercheq/circuit.hpp"
#include "supercheq/errors.hpp"
#include "supercheq/gates.hpp"
#include "supercheq/stream.hpp"

namespace supercheq {

/// Dense pure-state simulator. Basis convention: qubit q is bit q of the
/// amplitude index (qubit 0 = least significant bit), so |q1 q0> = |10>
/// lives at index 2.
class StateVector {
public:
    static StateVector zero_state(int n_qubits) {
        require(n_qubits >= 1, "StateVector: n_qubits must be positive");
        require_capacity(n_qubits <= 26, "StateVector: more than 2^26 amplitudes");
        StateVector s;
        s.n_ = n_qubits;
        s.amp_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
        s.amp_(0) = 1.0;
        return s;
    }

    static StateVector from_amplitudes(int n_qubits, Eigen::VectorXcd amplitudes) {
        require(amplitudes.size() == (Eigen::Index{1} << n_qubits),
                "StateVector: amplitude count must be 2^n");
        StateVector s;
        s.n_ = n_qubits;
        s.amp_ = std::move(amplitudes);
        return s;
    }

    int n_qubits() const { return n_; }
    Eigen::Index dim() const { return amp_.size(); }
    const Eigen::VectorXcd& amplitudes() const { return amp_; }
    double norm() const { return amp_.norm(); }

    Complex inner(const StateVector& other) const {
        require(n_ == other.n_, "StateVector: qubit count mismatch");
        return amp_.dot(other.amp_);  // conjugates *this
    }

    void apply(const Gate& g) {
        switch (g.kind) {
            case GateKind::H:
                apply_1q(g.qubits[0], h_matrix());
                break;
            case GateKind::S:
                apply_1q(g.qubits[0], s_matrix());
                break;
            case GateKind::CZ:
                apply_cz(g.qubits[0], g.qubits[1]);
                break;
            case GateKind::CX:
                apply_cx(g.qubits[0], g.qubits[1]);
                break;
            case GateKind::SWAP:
                apply_swap(g.qubits[0], g.qubits[1]);
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
            case GateKind::U4:
                apply_dense(g.qubits, g.matrix);
                break;
            case GateKind::U:
                apply_dense(g.qubits, g.matrix);
                break;
        }
    }

    void apply_1q(int q, const Eigen::Matrix2cd& m) {
        check_qubit(q);
        const std::uint64_t step = std::uint64_t{1} << q;
        const std::uint64_t size = static_cast<std::uint64_t>(amp_.size());
        for (std::uint64_t base = 0; base < size; base += 2 * step) {
            for (std::uint64_t low = 0; low < step; ++low) {
                const std::uint64_t i0 = base + low;
                const std::uint64_t i1 = i0 + step;
                const Complex a = amp_(static_cast<Eigen::Index>(i0));
                const Complex b = amp_(static_cast<Eigen::Index>(i1));
                amp_(static_cast<Eigen::Index>(i0)) = m(0, 0) * a + m(0, 1) * b;
                amp_(static_cast<Eigen::Index>(i1)) = m(1, 0) * a + m(1, 1) * b;
            }
        }
    }

    void apply_cz(int a, int b) {
        check_qubit(a);
        check_qubit(b);
        const std::uint64_t ma = std::uint64_t{1} << a;
        const std::uint64_t mb = std::uint64_t{1} << b;
        for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(amp_.size()); ++x) {
            if ((x & ma) && (x & mb)) amp_(static_cast<Eigen::Index>(x)) = -amp_(static_cast<Eigen::Index>(x));
        }
    }

    void apply_cx(int control, int target) {
        check_qubit(control);
        check_qubit(target);
        const std::uint64_t mc = std::uint64_t{1} << control;
        const std::uint64_t mt = std::uint64_t{1} << target;
        for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(amp_.size()); ++x) {
            if ((x & mc) && !(x & mt)) {
                std::swap(amp_(static_cast<Eigen::Index>(x)),
                          amp_(static_cast<Eigen::Index>(x | mt)));
            }
        }
    }

    void apply_swap(int a, int b) {
        check_qubit(a);
        check_qubit(b);
        const std::uint64_t ma = std::uint64_t{1} << a;
        const std::uint64_t mb = std::uint64_t{1} << b;
        for (std::uint64_t x = 0; x < static_cast<std::uint64_t>(amp_.size()); ++x) {
            if ((x & ma) && !(x & mb)) {
                std::swap(amp_(static_cast<Eigen::Index>(x)),
                          amp_(static_cast<Eigen::Index>((x & ~ma) | mb)));
            }
        }
    }

    /// Dense k-qubit unitary; qubits[0] is the least significant local bit.
    void apply_dense(const std::vector<int>& qubits, const Eigen::MatrixXcd& m) {
        const std::size_t k = qubits.size();
        require(m.rows() == (Eigen::Index{1} << k), "apply_dense: dimension mismatch");
        for (int q : qubits) check_qubit(q);
        const std::uint64_t size = static_cast<std::uint64_t>(amp_.size());
        std::uint64_t mask = 0;
        for (int q : qubits) mask |= std::uint64_t{1} << q;
        const std::uint64_t block = std::uint64_t{1} << k;
        std::vector<Eigen::Index> scatter(block);
        Eigen::VectorXcd local(static_cast<Eigen::Index>(block));
        for (std::uint64_t x = 0; x < size; ++x) {
            if (x & mask) continue;  // visit each coset once, at its zero offset
            for (std::uint64_t v = 0; v < block; ++v) {
                std::uint64_t y = x;
                for (std::size_t j = 0; j < k; ++j) {
                    if ((v >> j) & 1) y |= std::uint64_t{1} << qubits[j];
                }
                scatter[v] = static_cast<Eigen::Index>(y);
                local(static_cast<Eigen::Index>(v)) = amp_(scatter[v]);
            }
            local = m * local;
            for (std::uint64_t v = 0; v < block; ++v) {
                amp_(scatter[v]) = local(static_cast<Eigen::Index>(v));
            }
        }
    }

    /// Samples a computational-basis outcome index from |amplitude|^2.
    std::uint64_t sample_outcome(SeededStream& stream) const {
        const double u = stream.uniform01();
        double acc = 0.0;
        const std::uint64_t size = static_cast<std::uint64_t>(amp_.size());
        for (std::uint64_t x = 0; x < size; ++x) {
            acc += std::norm(amp_(static_cast<Eigen::Index>(x)));
            if (u < acc) return x;
        }
        return size - 1;  // guards the u ~ 1 edge under rounding
    }

    /// Tensor product; `this` occupies the low qubits of the result.
    StateVector tensor(const StateVector& high) const {
        StateVector out;
        out.n_ = n_ + high.n_;
        require_capacity(out.n_ <= 26, "StateVector: tensor product too large");
        out.amp_ = Eigen::VectorXcd(Eigen::Index{1} << out.n_);
        for (Eigen::Index j = 0; j < high.amp_.size(); ++j) {
            out.amp_.segment(j * amp_.size(), amp_.size()) = high.amp_(j) * amp_;
        }
        return out;
    }

private:
    void check_qubit(int q) const {
        require(q >= 0 && q < n_, "StateVector: qubit index out of range");
    }

    int n_ = 0;
    Eigen::VectorXcd amp_;
};

inline StateVector run_circuit(const Circuit& circuit, StateVector initial) {
    require(initial.n_qubits() == circuit.n_qubits,
            "run_circuit: state/circuit qubit count mismatch");
    circuit.validate();
    for (const Gate& g : circuit.gates) initial.apply(g);
    check_invariant(std::abs(initial.norm() - 1.0) < 1e-10,
                    "run_circuit: norm drift exceeded tolerance");
    return initial;
}

inline StateVector run_circuit(const Circuit& circuit) {
    return run_circuit(circuit, StateVector::zero_state(circuit.n_qubits));
}

}  // namespace supercheq

#endif  // SUPERCHEQ_STATEVECTOR_HPP
