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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "supercheq/circuit.hpp"
#include "supercheq/errors.hpp"
#include "supercheq/gates.hpp"

using namespace supercheq;
using Catch::Matchers::WithinAbs;

TEST_CASE("gate factories record kinds and operands", "[gates]") {
    CHECK(Gate::h(3).kind == GateKind::H);
    CHECK(Gate::h(3).qubits == std::vector<int>{3});
    CHECK(Gate::cz(1, 4).qubits == std::vector<int>{1, 4});
    CHECK(Gate::cx(0, 2).qubits == std::vector<int>{0, 2});
    CHECK(Gate::rz(5, 0.25).params == std::vector<double>{0.25});
    const Gate gr = Gate::gr(0.5, 1.5);
    CHECK(gr.qubits.empty());
    CHECK(gr.params == std::vector<double>{0.5, 1.5});
    CHECK(gr.arity() == 0);
    CHECK(gate_kind_name(GateKind::GR) == "gr");
    CHECK(gate_kind_name(GateKind::CZ) == "cz");
}

TEST_CASE("named gate matrices are unitary", "[gates]") {
    CHECK(unitarity_defect(h_matrix()) < 1e-15);
    CHECK(unitarity_defect(s_matrix()) < 1e-15);
    CHECK(unitarity_defect(rz_matrix(0.7)) < 1e-15);
    CHECK(unitarity_defect(gr_single_qubit(0.3, 2.1)) < 1e-15);
}

TEST_CASE("gr factor reduces to known rotations", "[gates]") {
    using std::numbers::pi;
    // phi = 0 gives exp(-i theta X / 2); at theta = pi that maps |0> to -i|1>.
    const Eigen::Matrix2cd rx = gr_single_qubit(pi, 0.0);
    CHECK_THAT(std::abs(rx(0, 0)), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(rx(1, 0) - std::complex<double>(0.0, -1.0)), WithinAbs(0.0, 1e-15));
    // phi = pi/2 gives exp(-i theta Y / 2), a real rotation matrix.
    const Eigen::Matrix2cd ry = gr_single_qubit(0.8, pi / 2.0);
    CHECK_THAT(ry(0, 0).real(), WithinAbs(std::cos(0.4), 1e-15));
    CHECK_THAT(ry(1, 0).real(), WithinAbs(std::sin(0.4), 1e-15));
    CHECK_THAT(std::abs(ry(0, 0).imag()) + std::abs(ry(1, 0).imag()), WithinAbs(0.0, 1e-15));
}

TEST_CASE("circuit layers partition the gate list", "[circuit]") {
    Circuit c(3);
    c.add(Gate::h(0)).add(Gate::h(1)).end_layer();
    c.add(Gate::cz(0, 1)).end_layer();
    c.add(Gate::rz(2, 0.1)).end_layer();
    CHECK(c.depth() == 3);
    CHECK(c.gates.size() == 4);
    CHECK_NOTHROW(c.validate());

    Circuit open(2);
    open.add(Gate::h(0)).end_layer();
    open.add(Gate::h(1));  // trailing gate outside any layer
    CHECK_THROWS_AS(open.validate(), ConfigError);
}

TEST_CASE("circuit validation rejects bad operands", "[circuit]") {
    Circuit c(2);
    c.add(Gate::h(2)).end_layer();  // qubit out of range
    CHECK_THROWS_AS(c.validate(), ConfigError);

    Circuit dup(2);
    dup.add(Gate::cz(1, 1)).end_layer();
    CHECK_THROWS_AS(dup.validate(), ConfigError);

    Circuit zero;
    zero.n_qubits = 0;
    CHECK_THROWS_AS(zero.validate(), ConfigError);

    Eigen::Matrix2cd not_unitary;
    not_unitary << 1, 1, 0, 1;
    Circuit nu(1);
    nu.add(Gate::u2(0, not_unitary)).end_layer();
    CHECK_THROWS_AS(nu.validate(), ConfigError);
}

TEST_CASE("circuit JSON round-trips", "[circuit]") {
    Circuit c(3);
    c.add(Gate::gr(0.25, 1.0));
    for (int q = 0; q < 3; ++q) c.add(Gate::rz(q, 0.1 * q));
    c.add(Gate::cz(0, 2)).end_layer();
    Eigen::Matrix2cd u = s_matrix();
    c.add(Gate::u2(1, u)).end_layer();
    c.validate();

    const Circuit back = Circuit::from_json(c.to_json());
    back.validate();
    REQUIRE(back.gates.size() == c.gates.size());
    CHECK(back.n_qubits == c.n_qubits);
    CHECK(back.layers == c.layers);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        CHECK(back.gates[i].kind == c.gates[i].kind);
        CHECK(back.gates[i].qubits == c.gates[i].qubits);
        CHECK(back.gates[i].params == c.gates[i].params);
    }
    const auto& m = back.gates.back().matrix;
    CHECK((m - u).cwiseAbs().maxCoeff() < 1e-15);
}
