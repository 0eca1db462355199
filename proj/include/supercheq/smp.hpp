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

#ifndef SUPERCHEQ_SMP_HPP
#define SUPERCHEQ_SMP_HPP

#include <cmath>
#include <string>
#include <vector>

#include "supercheq/bits.hpp"
#include "supercheq/ee.hpp"
#include "supercheq/errors.hpp"
#include "supercheq/ie.hpp"
#include "supercheq/json.hpp"
#include "supercheq/swap_test.hpp"

namespace supercheq {

/// Copies M so that the one-sided wrong-accept bound c^M drops below eps:
/// M = ceil(ln eps / ln c).
inline int copies_needed(double eps, double fidelity_cap = 0.5) {
    require(eps > 0.0 && eps < 1.0, "copies_needed: eps must be in (0, 1)");
    require(fidelity_cap > 0.0 && fidelity_cap < 1.0,
            "copies_needed: fidelity cap must be in (0, 1)");
    int m = std::max(
        1, static_cast<int>(std::ceil(std::log(eps) / std::log(fidelity_cap) - 1e-12)));
    while (std::pow(fidelity_cap, m) > eps) ++m;
    return m;
}

/// Session configuration: which fingerprint family the two parties use,
/// which test the referee runs, and the target error.
struct SmpConfig {
    enum class Protocol { IE, EE };

    Protocol protocol = Protocol::IE;
    EncodingSpec ee_spec;        // consulted only when protocol == EE
    bool standard_test = true;   // false -> destructive test
    bool recycle = false;        // standard test only: keep copies after use
    double fidelity_cap = 0.5;   // c in the c^M bound
    std::string nonce;           // master nonce; copies derive nonce + ":" + m

    void validate() const {
        require(fidelity_cap > 0.0 && fidelity_cap < 1.0,
                "SmpConfig: fidelity cap must be in (0, 1)");
        require(!recycle || standard_test,
                "SmpConfig: recycling requires the standard test");
        if (protocol == Protocol::EE) ee_spec.validate();
    }

    const char* protocol_name() const {
        return protocol == Protocol::IE ? "ie" : "ee";
    }
};

/// Everything the referee and the accountant record about one session.
struct SmpTranscript {
    std::string protocol;
    std::size_t file_bits = 0;        // N
    int n_qubits = 0;                 // n per fingerprint
    int copies = 0;                   // M
    long qubits_sent = 0;             // 2 * M * n
    long classical_naive_bits = 0;    // both parties ship the whole file: 2N
    long classical_optimal_bits = 0;  // best classical SMP fingerprints
    bool equal = false;
    double error_bound = 0.0;
    bool recycled = false;

    nlohmann::json to_json() const {
        return nlohmann::json{{"protocol", protocol},
                              {"N", file_bits},
                              {"n", n_qubits},
                              {"M", copies},
                              {"qubits_sent", qubits_sent},
                              {"classical_naive_bits", classical_naive_bits},
                              {"classical_optimal_bits", classical_optimal_bits},
                              {"decision", equal ? "equal" : "unequal"},
                              {"error_bound", error_bound},
                              {"recycled", recycled}};
    }
};

namespace detail {

/// Session randomness is keyed by both files so repeated sessions with
/// different inputs draw independent-looking shots.
inline SeededStream session_stream(const FileBits& a, const FileBits& b,
                                   const std::string& nonce) {
    FileBits joint = FileBits::zeros(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) joint.set_bit(i, a.bit(i));
    for (std::size_t i = 0; i < b.size(); ++i) joint.set_bit(a.size() + i, b.bit(i));
    return SeededStream(joint, nonce + "|test");
}

}  // namespace detail

/// One referee round: both parties fingerprint their file M times, the
/// referee runs one single-shot test per copy pair and decides.
inline SmpTranscript run_smp_session(const SmpConfig& config, const FileBits& file_a,
                                     const FileBits& file_b, double eps) {
    config.validate();
    SmpTranscript t;
    t.protocol = config.protocol_name();
    t.file_bits = std::max(file_a.size(), file_b.size());
    t.copies = copies_needed(eps, config.fidelity_cap);
    t.classical_naive_bits = 2 * static_cast<long>(t.file_bits);
    t.classical_optimal_bits =
        static_cast<long>(std::ceil(std::sqrt(3.0 * static_cast<double>(t.file_bits)))) *
        t.copies;
    t.recycled = config.recycle && config.standard_test;

    // The referee sees the recorded lengths first; a mismatch needs no
    // quantum exchange at all.
    if (file_a.size() != file_b.size()) {
        t.n_qubits = 0;
        t.qubits_sent = 0;
        t.equal = false;
        t.error_bound = 0.0;
        return t;
    }

    SeededStream test_stream = detail::session_stream(file_a, file_b, config.nonce);
    std::vector<SwapTestOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(t.copies));

    if (config.protocol == SmpConfig::Protocol::IE) {
        const StateVector sa = run_circuit(graph_state_circuit(file_to_graph(file_a)));
        const StateVector sb = run_circuit(graph_state_circuit(file_to_graph(file_b)));
        t.n_qubits = sa.n_qubits();
        for (int m = 0; m < t.copies; ++m) {
            outcomes.push_back(config.standard_test
                                   ? standard_swap_test(sa, sb, 1, test_stream)
                                   : destructive_swap_test(sa, sb, 1, test_stream));
        }
    } else {
        require(config.ee_spec.n_qubits >= 1, "run_smp_session: EE spec required");
        t.n_qubits = config.ee_spec.n_qubits;
        for (int m = 0; m < t.copies; ++m) {
            // Fresh shared randomness per copy: same nonce on both sides.
            const std::string copy_nonce = config.nonce + ":" + std::to_string(m);
            const StateVector sa = fingerprint_ee(config.ee_spec, file_a, copy_nonce);
            const StateVector sb = fingerprint_ee(config.ee_spec, file_b, copy_nonce);
            outcomes.push_back(config.standard_test
                                   ? standard_swap_test(sa, sb, 1, test_stream)
                                   : destructive_swap_test(sa, sb, 1, test_stream));
        }
    }

    t.qubits_sent = 2L * t.copies * t.n_qubits;
    const RefereeDecision d = referee_decide(outcomes, config.fidelity_cap);
    t.equal = d.equal;
    t.error_bound = d.error_bound;
    return t;
}

}  // namespace supercheq

#endif  // SUPERCHEQ_SMP_HPP
