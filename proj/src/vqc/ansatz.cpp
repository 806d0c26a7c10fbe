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

#include "qssl/vqc/ansatz.hpp"

#include <numbers>
#include <string>

namespace qssl::vqc {

AnsatzParams AnsatzParams::random(std::size_t layers, std::size_t wires, Rng &rng) {
    AnsatzParams p(layers, wires);
    for (double &v : p.values_) {
        v = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return p;
}

EmbedUnitary::EmbedUnitary(qsim::GateMatrix dense) {
    if (!dense.square()) {
        throw ShapeError("embed unitary must be square");
    }
    const double defect = linalg::unitarity_defect(dense);
    if (!(defect <= qsim::kUnitarityTol)) {
        throw ValidationError("embed unitary is not unitary (max |U^H U - I| = " +
                              std::to_string(defect) + ")");
    }
    impl_ = std::make_shared<const Impl>(std::move(dense));
}

EmbedUnitary::EmbedUnitary(linalg::OrthogonalFactor factor)
    : impl_{std::make_shared<const Impl>(std::move(factor))} {}

std::size_t EmbedUnitary::dim() const noexcept {
    if (const auto *m = std::get_if<qsim::GateMatrix>(impl_.get())) {
        return m->rows();
    }
    if (const auto *q = std::get_if<linalg::OrthogonalFactor>(impl_.get())) {
        return q->dim();
    }
    return 0;
}

void EmbedUnitary::apply(qsim::StateVector &state) const {
    if (const auto *m = std::get_if<qsim::GateMatrix>(impl_.get())) {
        state.apply_full_unitary(*m);
    } else if (const auto *q = std::get_if<linalg::OrthogonalFactor>(impl_.get())) {
        state.apply_full_unitary(*q);
    }
}

void EmbedUnitary::apply_batch(std::span<qsim::StateVector> states) const {
    const auto *q = std::get_if<linalg::OrthogonalFactor>(impl_.get());
    if (q == nullptr) {
        for (auto &s : states) {
            apply(s);
        }
        return;
    }
    std::vector<std::span<linalg::cplx>> views;
    views.reserve(states.size());
    for (auto &s : states) {
        views.push_back(s.amplitudes());
    }
    q->apply_batch(views);
}

qsim::GateMatrix EmbedUnitary::dense(std::size_t dim_if_identity) const {
    if (const auto *m = std::get_if<qsim::GateMatrix>(impl_.get())) {
        return *m;
    }
    if (const auto *q = std::get_if<linalg::OrthogonalFactor>(impl_.get())) {
        return linalg::to_complex(q->dense());
    }
    return qsim::GateMatrix::identity(dim_if_identity);
}

void CircuitConfig::validate() const {
    if (n_qubits < 1 || n_qubits > qsim::kMaxQubits) {
        throw CapacityError("circuit qubit count " + std::to_string(n_qubits) +
                            " outside [1, " + std::to_string(qsim::kMaxQubits) + "]");
    }
    if (measure_wire >= n_qubits) {
        throw IndexError("measure wire " + std::to_string(measure_wire) + " out of range");
    }
    const std::size_t d = embed_unitary.dim();
    if (d != 0 && d != (std::size_t{1} << n_qubits)) {
        throw ShapeError("embed unitary dimension " + std::to_string(d) + " does not match " +
                         std::to_string(n_qubits) + " qubits");
    }
}

} // namespace qssl::vqc
