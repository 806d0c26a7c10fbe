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

namespace qssl::data {

/// Columns whose fitted standard deviation is below this become zero.
inline constexpr double kMinStd = 1e-12;

struct Standardized {
    linalg::RealMatrix x;
    std::vector<double> mean;
    std::vector<double> std; ///< population standard deviation
};

/// Z-scores every row with column statistics computed on `fit_rows` only.
Standardized standardize(const linalg::RealMatrix &x, std::span<const std::size_t> fit_rows);

enum class FeatureMode {
    automatic, ///< truncate when d > n, pad when d < n
    truncate,
    pad,
    pca,
};

[[nodiscard]] std::string_view to_string(FeatureMode mode) noexcept;
FeatureMode feature_mode_from_string(std::string_view name);

/// Maps d feature columns to n_qubits columns.
///
/// pca projects the centred rows onto the top n_qubits eigenvectors of the
/// population covariance, each sign-fixed so its largest-magnitude entry is
/// positive.
linalg::RealMatrix reduce_features(const linalg::RealMatrix &x, std::size_t n_qubits,
                                   FeatureMode mode);

} // namespace qssl::data
