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
#include <vector>

#include "qssl/linalg/matrix.hpp"

namespace qssl::graphssl {

/// One column of label scores, one entry per node (binary setting, c = 1).
using LabelMatrix = std::vector<double>;

/// Y with 1/0 on the labeled rows and 0 on every other row.
LabelMatrix initial_labels(std::size_t n_nodes, std::span<const std::size_t> labeled_rows,
                           std::span<const int> labels);

/// F(T) of the recursion F(t+1) = alpha * op * F(t) + (1 - alpha) * Y, F(0) = Y.
LabelMatrix propagate_labels(const linalg::RealMatrix &op, std::span<const double> y,
                             double alpha, std::size_t iterations);

/// Fixed point F* = (1 - alpha) (I - alpha op)^{-1} Y by a pivoted linear solve.
LabelMatrix closed_form_labels(const linalg::RealMatrix &op, std::span<const double> y,
                               double alpha);

/// 1 where F[row] >= threshold, else 0, for each listed row.
std::vector<int> pseudo_labels(std::span<const double> scores,
                               std::span<const std::size_t> rows, double threshold);

} // namespace qssl::graphssl
