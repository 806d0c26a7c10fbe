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

#include <filesystem>
#include <span>
#include <string>

#include "qssl/runner/experiment.hpp"

namespace qssl::runner {

inline constexpr std::string_view kResultsHeader =
    "dataset,qubits,layers,seed,test_accuracy,precision,recall,f1,mean_entropy,final_cost,"
    "wall_time_s";

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

/// Body of results.csv, header included.
std::string results_csv(std::span<const RunResult> results, bool record_timing);

/// Writes results.csv, the four plot CSVs and config.json (the effective
/// config plus the generator id) into `out_dir`, creating it if needed.
/// Throws IoError naming the path on failure.
void emit_outputs(std::span<const RunResult> results, const ExperimentConfig &config,
                  const std::filesystem::path &out_dir);

/// gradient_variance.csv for a gradient-variance probe.
void emit_gradient_variance(std::span<const GradientVariance> rows,
                            const ExperimentConfig &config,
                            const std::filesystem::path &out_dir);

} // namespace qssl::runner
