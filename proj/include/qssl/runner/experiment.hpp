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
#include <string>
#include <string_view>
#include <vector>

#include "qssl/error.hpp"
#include "qssl/eval/metrics.hpp"
#include "qssl/qsim/state_vector.hpp"
#include "qssl/runner/config.hpp"
#include "qssl/vqc/ansatz.hpp"

namespace qssl::runner {

/// Error raised inside a pipeline stage. `what()` reads "<stage>: <detail>".
class StageError : public Error {
  public:
    StageError(std::string stage, const std::string &detail)
        : Error(stage + ": " + detail), stage_{std::move(stage)} {}
    [[nodiscard]] const std::string &stage() const noexcept { return stage_; }

  private:
    std::string stage_;
};

struct RunResult {
    ExperimentConfig config; ///< single dataset, the seed actually used
    eval::MetricsReport metrics;
    double mean_entropy = 0.0;
    std::vector<double> entropies; ///< one per test sample, bits
    double final_cost = 0.0;
    std::vector<double> cost_history;
    double wall_time_s = 0.0;
    std::size_t pseudo_positive = 0; ///< pseudo-labels equal to 1
    std::size_t pseudo_count = 0;
    std::vector<std::string> warnings;
};

/// Everything up to, but not including, training: encoded training pool and
/// test set for one dataset.
struct PreparedExperiment {
    vqc::CircuitConfig circuit;
    std::vector<qsim::StateVector> train_states;
    std::vector<int> train_labels;
    std::vector<qsim::StateVector> test_states;
    std::vector<int> test_labels;
    std::size_t pseudo_positive = 0;
    std::size_t pseudo_count = 0;
    std::vector<std::string> warnings;
};

/// Stages load, split, preprocess, graph, propagate and circuit.
PreparedExperiment prepare_experiment(const ExperimentConfig &config);

/// The whole pipeline for `config.dataset` (a single dataset).
RunResult run_single(const ExperimentConfig &config);

/// One row per (dataset, qubit count). Row i of each dataset's list runs
/// with seed + i.
std::vector<RunResult> sweep_qubits(const ExperimentConfig &config,
                                    const std::vector<std::size_t> &qubit_list);

/// One row per (dataset, layer count), seeds as in sweep_qubits.
std::vector<RunResult> sweep_layers(const ExperimentConfig &config,
                                    const std::vector<std::size_t> &layer_list);

struct GradientVariance {
    std::string dataset;
    std::size_t n_qubits = 0;
    std::size_t draws = 0;
    double mean = 0.0;
    double variance = 0.0; ///< unbiased sample variance
};

/// Sample variance of dCost/dtheta[0,0,0] over `draws` random
/// initializations, for each qubit count. Draw d uses the probe stream of
/// seed + d.
std::vector<GradientVariance> gradient_variance(const ExperimentConfig &config,
                                                const std::vector<std::size_t> &qubit_list,
                                                std::size_t draws);

} // namespace qssl::runner
