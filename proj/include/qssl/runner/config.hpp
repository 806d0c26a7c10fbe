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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qssl/data/preprocess.hpp"
#include "qssl/data/split.hpp"
#include "qssl/graphssl/graph.hpp"
#include "qssl/vqc/cost.hpp"

namespace qssl::runner {

enum class AdjacencyMode { random, knn };
enum class ScalingMode {
    paper,      ///< standardize with statistics of every row
    no_leakage, ///< statistics of the labeled and unlabeled rows only
};
enum class TrainingPool {
    pseudo,       ///< labeled rows with true labels plus pseudo-labeled rows
    labeled_only, ///< labeled rows alone
};

[[nodiscard]] std::string_view to_string(AdjacencyMode mode) noexcept;
[[nodiscard]] std::string_view to_string(ScalingMode mode) noexcept;
[[nodiscard]] std::string_view to_string(TrainingPool pool) noexcept;
AdjacencyMode adjacency_mode_from_string(std::string_view name);
ScalingMode scaling_mode_from_string(std::string_view name);
TrainingPool training_pool_from_string(std::string_view name);

/// Every knob of one experiment. `dataset` is a bundled name, a CSV path,
/// or, for sweeps, a comma-separated list of either ("all" = every bundled
/// dataset).
struct ExperimentConfig {
    std::string dataset = "iris";
    std::size_t n_qubits = 4;
    std::size_t n_layers = 5;
    double alpha = 0.9;
    std::size_t T = 1000; ///< propagation iterations
    std::size_t K = 100;  ///< training epochs
    double lr = 0.01;
    std::uint64_t seed = 0;
    data::SplitFractions split;
    AdjacencyMode adjacency = AdjacencyMode::random;
    std::size_t knn_k = 10;
    double knn_sigma = 1.0;
    graphssl::OperatorMode op = graphssl::OperatorMode::spread;
    data::FeatureMode features = data::FeatureMode::automatic;
    ScalingMode scaling = ScalingMode::paper;
    /// Wires kept in the entropy bipartition; 0 means ceil(n_qubits / 2).
    std::size_t entropy_keep = 0;
    TrainingPool training_pool = TrainingPool::pseudo;
    double pseudo_threshold = 0.5;
    vqc::GradientMethod gradient = vqc::GradientMethod::adjoint;
    std::vector<std::size_t> qubit_list{4, 8, 12, 14};
    std::vector<std::size_t> layer_list{5, 10, 15, 20, 25, 30};
    /// Write measured wall times to results.csv. Off by default so reruns
    /// produce identical bytes.
    bool record_timing = false;
    std::string data_dir; ///< empty: default_data_dir()
    std::string out_dir = "results";

    /// Throws ValidationError for a field outside its range.
    void validate() const;
    /// Partition size actually used for `n_qubits`.
    [[nodiscard]] std::size_t partition_size() const noexcept;
    [[nodiscard]] std::filesystem::path resolved_data_dir() const;
    /// Dataset names or paths named by `dataset`.
    [[nodiscard]] std::vector<std::string> dataset_list() const;

    bool operator==(const ExperimentConfig &) const = default;
};

/// JSON text of the config, keys in a fixed order.
std::string to_json(const ExperimentConfig &config);
/// Parses JSON text. Missing keys keep their defaults; unknown keys throw
/// LookupError; wrong types and bad values throw ValidationError.
ExperimentConfig config_from_json(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path &path);

} // namespace qssl::runner
