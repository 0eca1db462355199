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

#ifndef SUPERCHEQ_HAAR_HPP
#define SUPERCHEQ_HAAR_HPP

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "supercheq/errors.hpp"
#include "supercheq/gates.hpp"
#include "supercheq/stream.hpp"

namespace supercheq {

/// Haar-distributed unitary via the Ginibre + QR recipe: fill with iid
/// standard complex Gaussians, take the QR factorization, and absorb the
/// phases of R's diagonal into Q so the effective R has a positive diagonal.
/// Without that phase fix, QR output is not Haar-distributed.
inline Eigen::MatrixXcd sample_haar_unitary(SeededStream& stream, int dim) {
    require(dim >= 1, "sample_haar_unitary: dim must be positive");
    Eigen::MatrixXcd g(dim, dim);
    for (int c = 0; c < dim; ++c) {
        for (int r = 0; r < dim; ++r) {
            auto [re, im] = stream.gaussian_pair();
            g(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < dim; ++c) {
        const Complex d = r(c, c);
        const double mag = std::abs(d);
        check_invariant(mag > 0.0, "sample_haar_unitary: singular Ginibre draw");
        q.col(c) *= d / mag;
    }
    return q;
}

/// Haar-random pure state of the given dimension. A normalized vector of
/// iid standard complex Gaussians has exactly the Haar distribution (the
/// Gaussian measure is unitarily invariant), so no QR pass is needed.
inline Eigen::VectorXcd sample_haar_state(SeededStream& stream, Eigen::Index dim) {
    require(dim >= 1, "sample_haar_state: dim must be positive");
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        auto [re, im] = stream.gaussian_pair();
        v(i) = Complex(re, im);
    }
    const double n = v.norm();
    check_invariant(n > 0.0, "sample_haar_state: zero-norm Gaussian draw");
    return v / n;
}

}  // namespace supercheq

#endif  // SUPERCHEQ_HAAR_HPP
