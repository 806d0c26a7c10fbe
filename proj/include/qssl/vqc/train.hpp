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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qssl/linalg/matrix.hpp"
#include "qssl/vqc/ansatz.hpp"
#include "qssl/vqc/cost.hpp"

namespace qssl::vqc {

struct TrainHyper {
    double lr = 0.01;
    std::size_t epochs = 100;
    std::uint64_t seed = 0;
    GradientMethod gradient = GradientMethod::adjoint;
};

struct TrainRecord {
    /// Cost at the parameters each step started from.
    std::vector<double> costs;
    AnsatzParams final_params;
    std::size_t steps = 0;
    double wall_time_s = 0.0;
};

/// Full-batch Adam on prepared states. Parameters start uniform(0, 2 pi)
/// drawn from `hyper.seed`. Throws NumericalError naming the step when the
/// cost turns non-finite.
std::pair<AnsatzParams, TrainRecord> train_prepared(std::span<const qsim::StateVector> prepared,
                                                    std::span<const int> labels,
                                                    const CircuitConfig &config,
                                                    const TrainHyper &hyper);

std::pair<AnsatzParams, TrainRecord> train(const linalg::RealMatrix &x_train,
                                           std::span<const int> y_train,
                                           const CircuitConfig &config, const TrainHyper &hyper);

} // namespace qssl::vqc
