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

#include "qssl/vqc/circuit.hpp"

#include <numbers>
#include <string>

namespace qssl::vqc {
namespace {

void check_params(const AnsatzParams &params, std::size_t n_qubits) {
    if (params.wires() != n_qubits) {
        throw ShapeError("ansatz has " + std::to_string(params.wires()) + " wires, circuit has " +
                         std::to_string(n_qubits));
    }
}

void apply_ring(qsim::StateVector &state, std::size_t layer) {
    const std::size_t n = state.n_qubits();
    const std::size_t r = ring_range(layer, n);
    if (r == 0) {
        return;
    }
    for (std::size_t w = 0; w < n; ++w) {
        state.apply_cnot(w, (w + r) % n);
    }
}

// In-place sign flip of amplitudes whose `wire` bit is set: psi <- Z_wire psi.
void apply_z(std::span<qsim::cplx> amps, std::size_t stride) {
    for (std::size_t block = 0; block < amps.size(); block += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            amps[block + k + stride] = -amps[block + k + stride];
        }
    }
}

} // namespace

qsim::StateVector prepare_state(std::span<const double> x, const CircuitConfig &config) {
    config.validate();
    qsim::StateVector state(config.n_qubits);
    state.angle_embed(x);
    config.embed_unitary.apply(state);
    return state;
}

std::vector<qsim::StateVector> prepare_states(const linalg::RealMatrix &features,
                                              const CircuitConfig &config) {
    config.validate();
    if (features.cols() != config.n_qubits) {
        throw ShapeError("feature matrix has " + std::to_string(features.cols()) +
                         " columns for " + std::to_string(config.n_qubits) + " qubits");
    }
    std::vector<qsim::StateVector> states;
    states.reserve(features.rows());
    for (std::size_t i = 0; i < features.rows(); ++i) {
        states.emplace_back(config.n_qubits);
        states.back().angle_embed(features.row(i));
    }
    config.embed_unitary.apply_batch(states);
    return states;
}

void apply_ansatz(qsim::StateVector &state, const AnsatzParams &params) {
    check_params(params, state.n_qubits());
    for (std::size_t l = 0; l < params.layers(); ++l) {
        for (std::size_t w = 0; w < params.wires(); ++w) {
            state.apply(qsim::gates::rot(params(l, w, 0), params(l, w, 1), params(l, w, 2)), w);
        }
        apply_ring(state, l);
    }
}

qsim::StateVector final_state(std::span<const double> x, const AnsatzParams &params,
                              const CircuitConfig &config) {
    if (params.layers() != config.n_layers) {
        throw ShapeError("ansatz has " + std::to_string(params.layers()) +
                         " layers, circuit expects " + std::to_string(config.n_layers));
    }
    auto state = prepare_state(x, config);
    apply_ansatz(state, params);
    return state;
}

double forward(std::span<const double> x, const AnsatzParams &params,
               const CircuitConfig &config) {
    return final_state(x, params, config).expectation_z(config.measure_wire);
}

double forward_prepared(const qsim::StateVector &prepared, const AnsatzParams &params,
                        std::size_t measure_wire) {
    qsim::StateVector state = prepared;
    apply_ansatz(state, params);
    return state.expectation_z(measure_wire);
}

double expectation_grad_param_shift(const qsim::StateVector &prepared,
                                    const AnsatzParams &params, std::size_t measure_wire,
                                    std::span<double> grad) {
    if (grad.size() != params.size()) {
        throw ShapeError("gradient buffer size mismatch");
    }
    constexpr double shift = std::numbers::pi / 2.0;
    AnsatzParams shifted = params;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double orig = params.flat()[i];
        shifted.flat()[i] = orig + shift;
        const double plus = forward_prepared(prepared, shifted, measure_wire);
        shifted.flat()[i] = orig - shift;
        const double minus = forward_prepared(prepared, shifted, measure_wire);
        shifted.flat()[i] = orig;
        grad[i] = 0.5 * (plus - minus);
    }
    return forward_prepared(prepared, params, measure_wire);
}

double expectation_grad_adjoint(const qsim::StateVector &prepared,
                                const AnsatzParams &params, std::size_t measure_wire,
                                std::span<double> grad) {
    const std::size_t n = prepared.n_qubits();
    check_params(params, n);
    if (grad.size() != params.size()) {
        throw ShapeError("gradient buffer size mismatch");
    }
    const auto &kernels = qsim::active_kernels();

    // Forward sweep with the rotations split into RZ, RY, RZ so every
    // parameterized gate is exp(-i t P / 2) for a Pauli P.
    qsim::StateVector psi = prepared;
    for (std::size_t l = 0; l < params.layers(); ++l) {
        for (std::size_t w = 0; w < n; ++w) {
            psi.apply(qsim::gates::rz(params(l, w, 0)), w);
            psi.apply(qsim::gates::ry(params(l, w, 1)), w);
            psi.apply(qsim::gates::rz(params(l, w, 2)), w);
        }
        apply_ring(psi, l);
    }
    const double value = psi.expectation_z(measure_wire);

    qsim::StateVector lambda = psi;
    apply_z(lambda.amplitudes(), lambda.stride(measure_wire));

    // d<Z>/dt = Im <lambda_k| P |psi_k>, with psi_k the state just after
    // gate k and lambda_k the adjoint state at the same point.
    const qsim::Gate2 pz = qsim::gates::pauli_z();
    const qsim::Gate2 py = qsim::gates::pauli_y();
    for (std::size_t l = params.layers(); l-- > 0;) {
        const std::size_t r = ring_range(l, n);
        if (r != 0) {
            for (std::size_t w = n; w-- > 0;) {
                psi.apply_cnot(w, (w + r) % n);
                lambda.apply_cnot(w, (w + r) % n);
            }
        }
        for (std::size_t w = n; w-- > 0;) {
            const std::size_t stride = psi.stride(w);
            const struct {
                std::size_t k;
                const qsim::Gate2 &pauli;
                qsim::Gate2 gate;
            } steps[3] = {
                {2, pz, qsim::gates::rz(params(l, w, 2))},
                {1, py, qsim::gates::ry(params(l, w, 1))},
                {0, pz, qsim::gates::rz(params(l, w, 0))},
            };
            for (const auto &s : steps) {
                const qsim::cplx elem = kernels.matrix_element(lambda.amplitudes(),
                                                               psi.amplitudes(), stride, s.pauli);
                grad[AnsatzParams::index(l, n, w, s.k)] = elem.imag();
                const qsim::Gate2 inv = qsim::gates::adjoint(s.gate);
                psi.apply(inv, w);
                lambda.apply(inv, w);
            }
        }
    }
    return value;
}

} // namespace qssl::vqc
