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

#include "qssl/vqc/train.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "qssl/error.hpp"
#include "qssl/rng.hpp"
#include "qssl/vqc/circuit.hpp"
#include "qssl/vqc/optim.hpp"

namespace qssl::vqc {

std::pair<AnsatzParams, TrainRecord> train_prepared(std::span<const qsim::StateVector> prepared,
                                                    std::span<const int> labels,
                                                    const CircuitConfig &config,
                                                    const TrainHyper &hyper) {
    config.validate();
    if (prepared.empty()) {
        throw ValidationError("training set is empty");
    }
    if (!(hyper.lr > 0.0) || !std::isfinite(hyper.lr)) {
        throw ValidationError("learning rate must be positive and finite");
    }
    const auto start = std::chrono::steady_clock::now();
    Rng rng(hyper.seed);
    AnsatzParams params = AnsatzParams::random(config.n_layers, config.n_qubits, rng);
    AdamState adam(params.size());
    TrainRecord record;
    record.costs.reserve(hyper.epochs);
    for (std::size_t step = 0; step < hyper.epochs; ++step) {
        const auto cg = cost_and_grad(prepared, labels, params, config.measure_wire,
                                      hyper.gradient);
        if (!std::isfinite(cg.cost)) {
            throw NumericalError("non-finite cost at training step " + std::to_string(step));
        }
        record.costs.push_back(cg.cost);
        adam_step(params.flat(), cg.grad.flat(), adam, hyper.lr);
        ++record.steps;
    }
    record.final_params = params;
    record.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {std::move(params), std::move(record)};
}

std::pair<AnsatzParams, TrainRecord> train(const linalg::RealMatrix &x_train,
                                           std::span<const int> y_train,
                                           const CircuitConfig &config, const TrainHyper &hyper) {
    if (x_train.rows() == 0) {
        throw ValidationError("training set is empty");
    }
    const auto states = prepare_states(x_train, config);
    return train_prepared(states, y_train, config, hyper);
}

} // namespace qssl::vqc
