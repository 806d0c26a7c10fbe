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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qssl/linalg/qr.hpp"
#include "qssl/qsim/gates.hpp"
#include "qssl/qsim/kernels.hpp"

namespace qssl::qsim {

/// Dense simulation limit.
inline constexpr std::size_t kMaxQubits = 20;

/// Pure state of n qubits as 2^n complex amplitudes.
///
/// Wire 0 is the most significant bit of the basis index:
/// b = sum_w bit_w(b) 2^(n-1-w).
class StateVector {
  public:
    /// |0...0> on `n_qubits` wires. Throws CapacityError outside [1, kMaxQubits].
    explicit StateVector(std::size_t n_qubits);

    /// Takes the amplitudes as given; the length must be 2^n_qubits.
    StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<cplx> amplitudes() noexcept { return amps_; }
    [[nodiscard]] cplx operator[](std::size_t basis) const { return amps_[basis]; }

    /// Basis-index distance between the two partners of `wire`.
    [[nodiscard]] std::size_t stride(std::size_t wire) const;

    /// Hot-path gate application; the caller guarantees unitarity.
    StateVector &apply(const Gate2 &gate, std::size_t wire);

    /// Validated single-qubit gate (2x2, unitary within kUnitarityTol).
    StateVector &apply_single_qubit_gate(const GateMatrix &gate, std::size_t wire);

    StateVector &apply_cnot(std::size_t control, std::size_t target);

    /// amplitudes <- unitary * amplitudes, for a validated 2^n x 2^n unitary.
    StateVector &apply_full_unitary(const GateMatrix &unitary);

    /// amplitudes <- Q * amplitudes for an orthogonal factor of matching size.
    StateVector &apply_full_unitary(const linalg::OrthogonalFactor &q);

    /// RX(features[w]) on every wire w of a fresh |0...0> state.
    StateVector &angle_embed(std::span<const double> features);

    /// <Z> on `wire`, in [-1, 1].
    [[nodiscard]] double expectation_z(std::size_t wire) const;

    [[nodiscard]] double norm() const;

  private:
    void check_wire(std::size_t wire) const;

    std::size_t n_qubits_;
    std::vector<cplx> amps_;
};

/// |0...0> preparation.
inline StateVector init_zero_state(std::size_t n_qubits) { return StateVector(n_qubits); }

} // namespace qssl::qsim
