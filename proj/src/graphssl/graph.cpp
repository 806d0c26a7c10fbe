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

#include "qssl/graphssl/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "qssl/rng.hpp"

namespace qssl::graphssl {

std::string_view to_string(OperatorMode mode) noexcept {
    return mode == OperatorMode::spread ? "spread" : "laplacian";
}

OperatorMode operator_mode_from_string(std::string_view name) {
    if (name == "spread") {
        return OperatorMode::spread;
    }
    if (name == "laplacian") {
        return OperatorMode::laplacian;
    }
    throw LookupError("unknown operator mode '" + std::string(name) +
                      "' (expected spread or laplacian)");
}

namespace {

void check_adjacency(const RealMatrix &a) {
    if (!a.square() || a.rows() == 0) {
        throw ShapeError("adjacency must be a non-empty square matrix");
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) < 0.0 || !std::isfinite(a(i, j))) {
                throw ValidationError("adjacency entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") = " +
                                      std::to_string(a(i, j)) +
                                      " is negative or non-finite");
            }
        }
    }
}

std::vector<double> row_sums(const RealMatrix &a) {
    std::vector<double> d(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto r = a.row(i);
        d[i] = std::accumulate(r.begin(), r.end(), 0.0);
    }
    return d;
}

} // namespace

RealMatrix normalized_operator(const RealMatrix &adjacency, OperatorMode mode) {
    check_adjacency(adjacency);
    const std::size_t n = adjacency.rows();
    std::vector<double> degree = row_sums(adjacency);
    std::vector<bool> self_loop(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (degree[i] == 0.0) {
            degree[i] = 1.0;
            self_loop[i] = true;
        }
    }
    std::vector<double> inv_sqrt(n);
    for (std::size_t i = 0; i < n; ++i) {
        inv_sqrt[i] = 1.0 / std::sqrt(degree[i]);
    }

    RealMatrix op(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double a = adjacency(i, j);
            if (i == j && self_loop[i]) {
                a = 1.0;
            }
            const double s = inv_sqrt[i] * a * inv_sqrt[j];
            if (mode == OperatorMode::spread) {
                op(i, j) = s;
            } else {
                op(i, j) = (i == j ? 1.0 : 0.0) - s;
            }
        }
    }
    return op;
}

GraphMatrices make_graph(RealMatrix adjacency, OperatorMode mode) {
    GraphMatrices g;
    g.op = normalized_operator(adjacency, mode);
    g.degree = row_sums(adjacency);
    g.adjacency = std::move(adjacency);
    g.mode = mode;
    return g;
}

GraphMatrices build_random_adjacency(std::size_t n_nodes, std::uint64_t seed,
                                     OperatorMode mode) {
    if (n_nodes < 2) {
        throw ValidationError("build_random_adjacency: need at least 2 nodes, got " +
                              std::to_string(n_nodes));
    }
    Rng rng(seed);
    RealMatrix r(n_nodes, n_nodes);
    for (double &v : r.data()) {
        v = rng.uniform();
    }
    RealMatrix a(n_nodes, n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i) {
        for (std::size_t j = i + 1; j < n_nodes; ++j) {
            const double w = 0.5 * (r(i, j) + r(j, i));
            a(i, j) = w;
            a(j, i) = w;
        }
    }
    return make_graph(std::move(a), mode);
}

GraphMatrices build_knn_adjacency(const RealMatrix &features, std::size_t k, double sigma,
                                  OperatorMode mode) {
    const std::size_t n = features.rows();
    if (n < 2) {
        throw ValidationError("build_knn_adjacency: need at least 2 samples");
    }
    if (k == 0 || k >= n) {
        throw ValidationError("build_knn_adjacency: k = " + std::to_string(k) +
                              " must lie in [1, " + std::to_string(n - 1) + "]");
    }
    if (!(sigma > 0.0)) {
        throw ValidationError("build_knn_adjacency: sigma must be positive");
    }
    RealMatrix dist2(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < features.cols(); ++c) {
                const double d = features(i, c) - features(j, c);
                s += d * d;
            }
            dist2(i, j) = s;
            dist2(j, i) = s;
        }
    }
    RealMatrix w(n, n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::erase(order, i);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return dist2(i, x) < dist2(i, y);
        });
        for (std::size_t r = 0; r < k; ++r) {
            const std::size_t j = order[r];
            const double weight = std::exp(-dist2(i, j) / (2.0 * sigma * sigma));
            w(i, j) = std::max(w(i, j), weight);
            w(j, i) = std::max(w(j, i), weight);
        }
        order.resize(n);
    }
    return make_graph(std::move(w), mode);
}

} // namespace qssl::graphssl
