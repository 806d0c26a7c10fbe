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
#include <string_view>
#include <vector>

#include "qssl/linalg/matrix.hpp"
#include "qssl/vqc/ansatz.hpp"

namespace qssl::vqc {

/// Probabilities are clamped to [kProbClamp, 1 - kProbClamp] inside the log.
inline constexpr double kProbClamp = 1e-12;

enum class GradientMethod {
    adjoint,     ///< reverse sweep over the gate list
    param_shift, ///< two circuit evaluations per angle
};

[[nodiscard]] std::string_view to_string(GradientMethod method) noexcept;
GradientMethod gradient_method_from_string(std::string_view name);

/// Logistic sigmoid.
double probability(double logit) noexcept;

/// 1 when logit > 0, else 0.
int predict(double logit) noexcept;

/// Mean binary cross-entropy of logits against labels, summed in index order.
double bce_from_logits(std::span<const double> logits, std::span<const int> labels);

double bce_cost(const AnsatzParams &params, const linalg::RealMatrix &x,
                std::span<const int> labels, const CircuitConfig &config);

/// Gradient of bce_cost with respect to every angle, using the two-term
/// shift rule per sample and dL/dlogit = (p - y) / N.
AnsatzParams param_shift_grad(const AnsatzParams &params, const linalg::RealMatrix &x,
                              std::span<const int> labels, const CircuitConfig &config);

/// Same gradient by adjoint differentiation.
AnsatzParams adjoint_grad(const AnsatzParams &params, const linalg::RealMatrix &x,
                          std::span<const int> labels, const CircuitConfig &config);

struct CostGradient {
    double cost = 0.0;
    AnsatzParams grad;
};

/// Cost and gradient over states already carrying the embedding and the
/// embed unitary. Per-sample contributions are reduced in index order.
CostGradient cost_and_grad(std::span<const qsim::StateVector> prepared,
                           std::span<const int> labels, const AnsatzParams &params,
                           std::size_t measure_wire, GradientMethod method);

/// Logits of prepared states.
std::vector<double> logits_prepared(std::span<const qsim::StateVector> prepared,
                                    const AnsatzParams &params, std::size_t measure_wire);

} // namespace qssl::vqc
