// Copyright 2026 The qssl Authors
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

#include "qssl/qsim/state_vector.hpp"

#include <cmath>
#include <utility>

namespace qssl::qsim {
namespace {

void check_qubit_count(std::size_t n) {
    if (n < 1 || n > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
    }
}

void check_unitary(const GateMatrix &m, const char *what) {
    const double defect = linalg::unitarity_defect(m);
    if (!(defect <= kUnitarityTol)) {
        throw ValidationError(std::string(what) + ": not unitary (max |U^H U - I| = " +
                              std::to_string(defect) + ")");
    }
}

} // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_{n_qubits} {
    check_qubit_count(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, cplx{});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_{n_qubits}, amps_{std::move(amplitudes)} {
    check_qubit_count(n_qubits);
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw ShapeError("state of " + std::to_string(n_qubits) + " qubits needs " +
                         std::to_string(std::size_t{1} << n_qubits) +
                         " amplitudes, got " + std::to_string(amps_.size()));
    }
}

void StateVector::check_wire(std::size_t wire) const {
    if (wire >= n_qubits_) {
        throw IndexError("wire " + std::to_string(wire) + " out of range for " +
                         std::to_string(n_qubits_) + " qubits");
    }
}

std::size_t StateVector::stride(std::size_t wire) const {
    check_wire(wire);
    return std::size_t{1} << (n_qubits_ - 1 - wire);
}

StateVector &StateVector::apply(const Gate2 &gate, std::size_t wire) {
    active_kernels().apply_gate(amps_, stride(wire), gate);
    return *this;
}

StateVector &StateVector::apply_single_qubit_gate(const GateMatrix &gate, std::size_t wire) {
    check_wire(wire);
    const Gate2 g = gates::from_matrix(gate);
    check_unitary(gate, "apply_single_qubit_gate");
    return apply(g, wire);
}

StateVector &StateVector::apply_cnot(std::size_t control, std::size_t target) {
    const std::size_t cbit = stride(control);
    const std::size_t tbit = stride(target);
    if (control == target) {
        throw ValidationError("apply_cnot: control and target are both wire " +
                              std::to_string(control));
    }
    for (std::size_t b = 0; b < amps_.size(); ++b) {
        if ((b & cbit) != 0 && (b & tbit) == 0) {
            std::swap(amps_[b], amps_[b | tbit]);
        }
    }
    return *this;
}

StateVector &StateVector::apply_full_unitary(const GateMatrix &unitary) {
    if (unitary.rows() != dim() || unitary.cols() != dim()) {
        throw ShapeError("apply_full_unitary: unitary is " + std::to_string(unitary.rows()) +
                         "x" + std::to_string(unitary.cols()) + ", state dimension is " +
                         std::to_string(dim()));
    }
    check_unitary(unitary, "apply_full_unitary");
    amps_ = linalg::matvec(unitary, std::span<const cplx>(amps_));
    return *this;
}

StateVector &StateVector::apply_full_unitary(const linalg::OrthogonalFactor &q) {
    if (q.dim() != dim()) {
        throw ShapeError("apply_full_unitary: factor dimension " + std::to_string(q.dim()) +
                         ", state dimension " + std::to_string(dim()));
    }
    q.apply(amps_);
    return *this;
}

StateVector &StateVector::angle_embed(std::span<const double> features) {
    if (features.size() != n_qubits_) {
        throw ShapeError("angle_embed: " + std::to_string(features.size()) +
                         " features for " + std::to_string(n_qubits_) + " qubits");
    }
    if (amps_[0] != cplx{1.0, 0.0}) {
        throw ValidationError("angle_embed: state is not a fresh |0...0>");
    }
    for (std::size_t w = 0; w < n_qubits_; ++w) {
        apply(gates::rx(features[w]), w);
    }
    return *this;
}

double StateVector::expectation_z(std::size_t wire) const {
    return active_kernels().expectation_z(amps_, stride(wire));
}

double StateVector::norm() const { return std::sqrt(active_kernels().norm_sq(amps_)); }

} // namespace qssl::qsim
