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
#include <string_view>
#include <vector>

#include "qssl/linalg/matrix.hpp"

namespace qssl::graphssl {

using linalg::RealMatrix;

enum class OperatorMode {
    spread,    ///< S = D^{-1/2} A D^{-1/2}
    laplacian, ///< I - S
};

[[nodiscard]] std::string_view to_string(OperatorMode mode) noexcept;
[[nodiscard]] OperatorMode operator_mode_from_string(std::string_view name);

/// Similarity graph over samples together with its normalized operator.
struct GraphMatrices {
    RealMatrix adjacency;
    std::vector<double> degree; ///< row sums of `adjacency`
    RealMatrix op;              ///< normalized operator in `mode`
    OperatorMode mode = OperatorMode::spread;

    [[nodiscard]] std::size_t n_nodes() const noexcept { return adjacency.rows(); }
};

/// Normalized propagation operator of a nonnegative symmetric adjacency.
/// A node with zero degree is given a unit self-loop first.
RealMatrix normalized_operator(const RealMatrix &adjacency, OperatorMode mode);

/// Wraps an adjacency matrix with its degrees and operator.
GraphMatrices make_graph(RealMatrix adjacency, OperatorMode mode = OperatorMode::spread);

/// A_ij = (R_ij + R_ji) / 2 for R uniform(0,1) drawn row-major from the seed;
/// zero diagonal.
GraphMatrices build_random_adjacency(std::size_t n_nodes, std::uint64_t seed,
                                     OperatorMode mode = OperatorMode::spread);

/// Gaussian-weighted k-nearest-neighbour graph, W_ij = exp(-|x_i - x_j|^2 / (2 sigma^2))
/// when j is among the k nearest of i or vice versa. Ties in distance are
/// broken by lower index.
GraphMatrices build_knn_adjacency(const RealMatrix &features, std::size_t k, double sigma,
                                  OperatorMode mode = OperatorMode::spread);

} // namespace qssl::graphssl
