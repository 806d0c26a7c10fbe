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
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "qssl/linalg/qr.hpp"
#include "qssl/qsim/state_vector.hpp"
#include "qssl/rng.hpp"

namespace qssl::vqc {

/// Rotation angles of the strongly-entangling ansatz, shape (layers, wires, 3).
/// The three angles of a (layer, wire) slot are (phi, theta, omega) of
/// Rot = RZ(omega) RY(theta) RZ(phi).
class AnsatzParams {
  public:
    AnsatzParams() = default;
    AnsatzParams(std::size_t layers, std::size_t wires, double fill = 0.0)
        : layers_{layers}, wires_{wires}, values_(layers * wires * 3, fill) {}

    /// Uniform(0, 2 pi) initialization.
    static AnsatzParams random(std::size_t layers, std::size_t wires, Rng &rng);

    [[nodiscard]] std::size_t layers() const noexcept { return layers_; }
    [[nodiscard]] std::size_t wires() const noexcept { return wires_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    double &operator()(std::size_t layer, std::size_t wire, std::size_t k) {
        return values_[index(layer, wire, k)];
    }
    double operator()(std::size_t layer, std::size_t wire, std::size_t k) const {
        return values_[index(layer, wire, k)];
    }

    [[nodiscard]] std::span<double> flat() noexcept { return values_; }
    [[nodiscard]] std::span<const double> flat() const noexcept { return values_; }

    [[nodiscard]] static constexpr std::size_t index(std::size_t layer, std::size_t wires,
                                                     std::size_t wire, std::size_t k) {
        return (layer * wires + wire) * 3 + k;
    }

    bool operator==(const AnsatzParams &) const = default;

  private:
    [[nodiscard]] std::size_t index(std::size_t layer, std::size_t wire, std::size_t k) const {
        return index(layer, wires_, wire, k);
    }

    std::size_t layers_ = 0;
    std::size_t wires_ = 0;
    std::vector<double> values_;
};

/// Fixed unitary applied after the angle embedding. Either the identity, a
/// dense gate matrix, or an orthogonal factor kept in reflector form (the
/// representation used for large registers).
class EmbedUnitary {
  public:
    EmbedUnitary() = default; ///< identity
    explicit EmbedUnitary(qsim::GateMatrix dense);
    explicit EmbedUnitary(linalg::OrthogonalFactor factor);

    [[nodiscard]] bool is_identity() const noexcept {
        return std::holds_alternative<std::monostate>(*impl_);
    }
    /// Dimension, or 0 for the identity (which fits any register).
    [[nodiscard]] std::size_t dim() const noexcept;

    void apply(qsim::StateVector &state) const;
    void apply_batch(std::span<qsim::StateVector> states) const;

    /// Dense matrix; O(dim^3) for a reflector-form factor.
    [[nodiscard]] qsim::GateMatrix dense(std::size_t dim_if_identity) const;

  private:
    using Impl = std::variant<std::monostate, qsim::GateMatrix, linalg::OrthogonalFactor>;
    std::shared_ptr<const Impl> impl_ = std::make_shared<const Impl>();
};

struct CircuitConfig {
    std::size_t n_qubits = 1;
    std::size_t n_layers = 0;
    EmbedUnitary embed_unitary;
    std::size_t measure_wire = 0;

    /// Throws on inconsistent sizes.
    void validate() const;
};

/// CNOT ring range of `layer`: (layer mod (n-1)) + 1, or 0 when n == 1.
constexpr std::size_t ring_range(std::size_t layer, std::size_t n_qubits) {
    return n_qubits < 2 ? 0 : (layer % (n_qubits - 1)) + 1;
}

} // namespace qssl::vqc
