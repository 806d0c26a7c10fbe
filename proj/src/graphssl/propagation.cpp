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

#include "qssl/graphssl/propagation.hpp"

#include <cmath>
#include <string>

#include "qssl/linalg/solve.hpp"
#include "qssl/qsim/kernels.hpp"

namespace qssl::graphssl {
namespace {

void check_inputs(const linalg::RealMatrix &op, std::span<const double> y, double alpha) {
    if (!op.square()) {
        throw ShapeError("propagation operator must be square");
    }
    if (op.rows() != y.size()) {
        throw ShapeError("operator has " + std::to_string(op.rows()) +
                         " rows but label matrix has " + std::to_string(y.size()));
    }
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw ValidationError("alpha = " + std::to_string(alpha) + " outside [0, 1)");
    }
}

} // namespace

LabelMatrix initial_labels(std::size_t n_nodes, std::span<const std::size_t> labeled_rows,
                           std::span<const int> labels) {
    if (labeled_rows.size() != labels.size()) {
        throw ShapeError("initial_labels: " + std::to_string(labeled_rows.size()) +
                         " rows but " + std::to_string(labels.size()) + " labels");
    }
    LabelMatrix y(n_nodes, 0.0);
    for (std::size_t i = 0; i < labeled_rows.size(); ++i) {
        if (labeled_rows[i] >= n_nodes) {
            throw IndexError("initial_labels: row " + std::to_string(labeled_rows[i]) +
                             " out of range");
        }
        if (labels[i] != 0 && labels[i] != 1) {
            throw ValidationError("initial_labels: label must be 0 or 1");
        }
        y[labeled_rows[i]] = labels[i];
    }
    return y;
}

LabelMatrix propagate_labels(const linalg::RealMatrix &op, std::span<const double> y,
                             double alpha, std::size_t iterations) {
    check_inputs(op, y, alpha);
    const auto &kernels = qsim::active_kernels();
    const std::size_t n = y.size();
    LabelMatrix f(y.begin(), y.end());
    LabelMatrix next(n);
    for (std::size_t t = 0; t < iterations; ++t) {
        for (std::size_t i = 0; i < n; ++i) {
            next[i] = alpha * kernels.dot(op.row(i), f) + (1.0 - alpha) * y[i];
        }
        f.swap(next);
    }
    for (const double v : f) {
        if (!std::isfinite(v)) {
            throw NumericalError("propagate_labels: non-finite score after " +
                                 std::to_string(iterations) + " iterations");
        }
    }
    return f;
}

LabelMatrix closed_form_labels(const linalg::RealMatrix &op, std::span<const double> y,
                               double alpha) {
    check_inputs(op, y, alpha);
    const std::size_t n = y.size();
    linalg::RealMatrix system(n, n);
    linalg::RealMatrix rhs(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            system(i, j) = (i == j ? 1.0 : 0.0) - alpha * op(i, j);
        }
        rhs(i, 0) = (1.0 - alpha) * y[i];
    }
    const auto x = linalg::solve(std::move(system), std::move(rhs));
    return {x.data().begin(), x.data().end()};
}

std::vector<int> pseudo_labels(std::span<const double> scores,
                               std::span<const std::size_t> rows, double threshold) {
    std::vector<int> out;
    out.reserve(rows.size());
    for (const std::size_t r : rows) {
        if (r >= scores.size()) {
            throw IndexError("pseudo_labels: row " + std::to_string(r) + " out of range");
        }
        out.push_back(scores[r] >= threshold ? 1 : 0);
    }
    return out;
}

} // namespace qssl::graphssl
