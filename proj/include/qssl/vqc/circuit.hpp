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

#include <span>
#include <vector>

#include "qssl/linalg/matrix.hpp"
#include "qssl/vqc/ansatz.hpp"

namespace qssl::vqc {

/// Angle embedding of `x` followed by the embed unitary.
qsim::StateVector prepare_state(std::span<const double> x, const CircuitConfig &config);

/// prepare_state for every row of `features`, sharing one batched
/// application of the embed unitary.
std::vector<qsim::StateVector> prepare_states(const linalg::RealMatrix &features,
                                              const CircuitConfig &config);

/// Applies the L strongly-entangling layers in place.
void apply_ansatz(qsim::StateVector &state, const AnsatzParams &params);

/// Full circuit state for input `x`.
qsim::StateVector final_state(std::span<const double> x, const AnsatzParams &params,
                              const CircuitConfig &config);

/// Logit <Z_measure> of the circuit on input `x`, in [-1, 1].
double forward(std::span<const double> x, const AnsatzParams &params,
               const CircuitConfig &config);

/// Logit from an already prepared state.
double forward_prepared(const qsim::StateVector &prepared, const AnsatzParams &params,
                        std::size_t measure_wire);

/// d<Z>/dtheta for every angle by the two-term shift rule (shift pi/2).
/// Returns <Z> at the unshifted parameters.
double expectation_grad_param_shift(const qsim::StateVector &prepared,
                                    const AnsatzParams &params, std::size_t measure_wire,
                                    std::span<double> grad);

/// Same quantity by reverse-mode (adjoint) differentiation: one forward
/// sweep and one backward sweep over the gate list.
double expectation_grad_adjoint(const qsim::StateVector &prepared,
                                const AnsatzParams &params, std::size_t measure_wire,
                                std::span<double> grad);

} // namespace qssl::vqc
