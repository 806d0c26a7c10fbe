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

#include "qssl/vqc/cost.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qssl/error.hpp"
#include "qssl/vqc/circuit.hpp"

namespace qssl::vqc {
namespace {

void check_labels(std::span<const int> labels, std::size_t n) {
    if (n == 0) {
        throw ValidationError("cost over an empty batch");
    }
    if (labels.size() != n) {
        throw ShapeError("batch has " + std::to_string(n) + " samples but " +
                         std::to_string(labels.size()) + " labels");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 0 && labels[i] != 1) {
            throw ValidationError("label " + std::to_string(labels[i]) + " at index " +
                                  std::to_string(i) + " is not binary");
        }
    }
}

std::vector<qsim::StateVector> prepare_checked(const AnsatzParams &params,
                                               const linalg::RealMatrix &x,
                                               std::span<const int> labels,
                                               const CircuitConfig &config) {
    check_labels(labels, x.rows());
    if (params.layers() != config.n_layers || params.wires() != config.n_qubits) {
        throw ShapeError("ansatz shape does not match circuit config");
    }
    return prepare_states(x, config);
}

} // namespace

std::string_view to_string(GradientMethod method) noexcept {
    return method == GradientMethod::adjoint ? "adjoint" : "param_shift";
}

GradientMethod gradient_method_from_string(std::string_view name) {
    if (name == "adjoint") {
        return GradientMethod::adjoint;
    }
    if (name == "param_shift" || name == "param-shift") {
        return GradientMethod::param_shift;
    }
    throw LookupError("unknown gradient method '" + std::string(name) + "'");
}

double probability(double logit) noexcept { return 1.0 / (1.0 + std::exp(-logit)); }

int predict(double logit) noexcept { return logit > 0.0 ? 1 : 0; }

double bce_from_logits(std::span<const double> logits, std::span<const int> labels) {
    check_labels(labels, logits.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        const double p = std::clamp(probability(logits[i]), kProbClamp, 1.0 - kProbClamp);
        sum += labels[i] == 1 ? std::log(p) : std::log1p(-p);
    }
    return -sum / static_cast<double>(logits.size());
}

std::vector<double> logits_prepared(std::span<const qsim::StateVector> prepared,
                                    const AnsatzParams &params, std::size_t measure_wire) {
    std::vector<double> out;
    out.reserve(prepared.size());
    for (const auto &s : prepared) {
        out.push_back(forward_prepared(s, params, measure_wire));
    }
    return out;
}

double bce_cost(const AnsatzParams &params, const linalg::RealMatrix &x,
                std::span<const int> labels, const CircuitConfig &config) {
    const auto states = prepare_checked(params, x, labels, config);
    return bce_from_logits(logits_prepared(states, params, config.measure_wire), labels);
}

CostGradient cost_and_grad(std::span<const qsim::StateVector> prepared,
                           std::span<const int> labels, const AnsatzParams &params,
                           std::size_t measure_wire, GradientMethod method) {
    check_labels(labels, prepared.size());
    const double inv_n = 1.0 / static_cast<double>(prepared.size());
    CostGradient out{0.0, AnsatzParams(params.layers(), params.wires())};
    std::vector<double> sample_grad(params.size());
    std::vector<double> logits(prepared.size());
    auto total = out.grad.flat();
    for (std::size_t i = 0; i < prepared.size(); ++i) {
        const double f =
            method == GradientMethod::adjoint
                ? expectation_grad_adjoint(prepared[i], params, measure_wire, sample_grad)
                : expectation_grad_param_shift(prepared[i], params, measure_wire, sample_grad);
        logits[i] = f;
        const double dl_df = (probability(f) - labels[i]) * inv_n;
        for (std::size_t k = 0; k < total.size(); ++k) {
            total[k] += dl_df * sample_grad[k];
        }
    }
    out.cost = bce_from_logits(logits, labels);
    return out;
}

AnsatzParams param_shift_grad(const AnsatzParams &params, const linalg::RealMatrix &x,
                              std::span<const int> labels, const CircuitConfig &config) {
    const auto states = prepare_checked(params, x, labels, config);
    return cost_and_grad(states, labels, params, config.measure_wire,
                         GradientMethod::param_shift)
        .grad;
}

AnsatzParams adjoint_grad(const AnsatzParams &params, const linalg::RealMatrix &x,
                          std::span<const int> labels, const CircuitConfig &config) {
    const auto states = prepare_checked(params, x, labels, config);
    return cost_and_grad(states, labels, params, config.measure_wire, GradientMethod::adjoint)
        .grad;
}

} // namespace qssl::vqc
