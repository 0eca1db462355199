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

#ifndef SUPERCHEQ_FIDELITY_HPP
#define SUPERCHEQ_FIDELITY_HPP

#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "supercheq/density.hpp"
#include "supercheq/errors.hpp"
#include "supercheq/json.hpp"
#include "supercheq/statevector.hpp"

namespace supercheq {

/// Which scalar to report when both states are mixed.
enum class MixedMetric {
    SwapOverlap,  // tr(rho sigma): what a SWAP test estimates.
    Uhlmann,      // (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2
};

inline double fidelity(const StateVector& a, const StateVector& b) {
    require(a.n_qubits() == b.n_qubits(), "fidelity: qubit count mismatch");
    return std::norm(a.inner(b));
}

inline double fidelity(const StateVector& psi, const DensityMatrix& rho) {
    require(psi.n_qubits() == rho.n_qubits(), "fidelity: qubit count mismatch");
    return (psi.amplitudes().adjoint() * rho.matrix() * psi.amplitudes())(0).real();
}

inline double fidelity(const DensityMatrix& rho, const StateVector& psi) {
    return fidelity(psi, rho);
}

inline double fidelity(const DensityMatrix& a, const DensityMatrix& b,
                       MixedMetric metric = MixedMetric::SwapOverlap) {
    return metric == MixedMetric::SwapOverlap ? a.swap_overlap(b)
                                              : a.uhlmann_fidelity(b);
}

/// Symmetric pairwise-fidelity matrix with row/column labels.
struct FidelityReport {
    std::vector<std::string> labels;
    Eigen::MatrixXd matrix;

    double max_offdiag() const {
        double best = 0.0;
        for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
            for (Eigen::Index j = i + 1; j < matrix.cols(); ++j) {
                best = std::max(best, matrix(i, j));
            }
        }
        return best;
    }

    double min_diag() const { return matrix.diagonal().minCoeff(); }

    void write_csv(std::ostream& os) const {
        os << "row,col,fidelity\n";
        for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
            for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
                os << labels[static_cast<std::size_t>(i)] << ','
                   << labels[static_cast<std::size_t>(j)] << ','
                   << format_double(matrix(i, j)) << '\n';
            }
        }
    }

    nlohmann::json to_json() const {
        std::vector<std::vector<double>> rows;
        rows.reserve(static_cast<std::size_t>(matrix.rows()));
        for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
            std::vector<double> row(static_cast<std::size_t>(matrix.cols()));
            for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
                row[static_cast<std::size_t>(j)] = matrix(i, j);
            }
            rows.push_back(std::move(row));
        }
        return nlohmann::json{{"labels", labels},
                              {"matrix", rows},
                              {"max_offdiag", max_offdiag()},
                              {"min_diag", min_diag()}};
    }
};

/// All-pairs |<psi_i|psi_j>|^2 via one Gram-matrix product of the stacked
/// amplitude rows. Labels default to the row index.
inline FidelityReport overlap_matrix(const std::vector<StateVector>& states,
                                     std::vector<std::string> labels = {}) {
    require(!states.empty(), "overlap_matrix: need at least one state");
    const int n = states.front().n_qubits();
    const Eigen::Index dim = states.front().dim();
    const Eigen::Index k = static_cast<Eigen::Index>(states.size());
    for (const StateVector& s : states) {
        require(s.n_qubits() == n, "overlap_matrix: qubit count mismatch");
    }
    if (labels.empty()) {
        labels.reserve(states.size());
        for (Eigen::Index i = 0; i < k; ++i) labels.push_back(std::to_string(i));
    }
    require(labels.size() == states.size(),
            "overlap_matrix: one label per state required");

    Eigen::MatrixXcd stacked(k, dim);
    for (Eigen::Index i = 0; i < k; ++i) {
        stacked.row(i) = states[static_cast<std::size_t>(i)].amplitudes().transpose();
    }
    const Eigen::MatrixXcd gram = stacked * stacked.adjoint();

    FidelityReport report;
    report.labels = std::move(labels);
    report.matrix = gram.cwiseAbs2();
    return report;
}

}  // namespace supercheq

#endif  // SUPERCHEQ_FIDELITY_HPP
