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

#include "qssl/data/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qssl/error.hpp"
#include "qssl/linalg/eigen.hpp"

namespace qssl::data {

Standardized standardize(const linalg::RealMatrix &x, std::span<const std::size_t> fit_rows) {
    if (fit_rows.empty()) {
        throw ValidationError("standardize: no rows to fit on");
    }
    const std::size_t n = x.rows(), d = x.cols();
    for (auto r : fit_rows) {
        if (r >= n) {
            throw IndexError("standardize: fit row " + std::to_string(r) + " out of range");
        }
    }
    Standardized out{linalg::RealMatrix(n, d), std::vector<double>(d), std::vector<double>(d)};
    const auto m = static_cast<double>(fit_rows.size());
    for (std::size_t c = 0; c < d; ++c) {
        double sum = 0.0;
        for (auto r : fit_rows) {
            sum += x(r, c);
        }
        const double mean = sum / m;
        double ss = 0.0;
        for (auto r : fit_rows) {
            ss += (x(r, c) - mean) * (x(r, c) - mean);
        }
        const double sd = std::sqrt(ss / m);
        out.mean[c] = mean;
        out.std[c] = sd;
        for (std::size_t r = 0; r < n; ++r) {
            out.x(r, c) = sd < kMinStd ? 0.0 : (x(r, c) - mean) / sd;
        }
    }
    return out;
}

std::string_view to_string(FeatureMode mode) noexcept {
    switch (mode) {
    case FeatureMode::automatic:
        return "auto";
    case FeatureMode::truncate:
        return "truncate";
    case FeatureMode::pad:
        return "pad";
    case FeatureMode::pca:
        return "pca";
    }
    return "unknown";
}

FeatureMode feature_mode_from_string(std::string_view name) {
    for (auto m : {FeatureMode::automatic, FeatureMode::truncate, FeatureMode::pad,
                   FeatureMode::pca}) {
        if (name == to_string(m)) {
            return m;
        }
    }
    throw LookupError("unknown feature mode '" + std::string(name) +
                      "' (expected auto, truncate, pad or pca)");
}

linalg::RealMatrix reduce_features(const linalg::RealMatrix &x, std::size_t n_qubits,
                                   FeatureMode mode) {
    const std::size_t n = x.rows(), d = x.cols();
    if (d == 0) {
        throw ValidationError("reduce_features: no feature columns");
    }
    if (n_qubits == 0) {
        throw ValidationError("reduce_features: zero target columns");
    }
    if (mode == FeatureMode::automatic) {
        mode = d >= n_qubits ? FeatureMode::truncate : FeatureMode::pad;
    }
    linalg::RealMatrix out(n, n_qubits);
    switch (mode) {
    case FeatureMode::truncate:
        if (d < n_qubits) {
            throw ValidationError("truncate: " + std::to_string(d) + " columns cannot fill " +
                                  std::to_string(n_qubits) + " qubits");
        }
        for (std::size_t r = 0; r < n; ++r) {
            std::copy_n(x.row(r).begin(), n_qubits, out.row(r).begin());
        }
        return out;
    case FeatureMode::pad:
        if (d > n_qubits) {
            throw ValidationError("pad: " + std::to_string(d) + " columns exceed " +
                                  std::to_string(n_qubits) + " qubits");
        }
        for (std::size_t r = 0; r < n; ++r) {
            std::copy_n(x.row(r).begin(), d, out.row(r).begin());
        }
        return out;
    case FeatureMode::pca:
        break;
    case FeatureMode::automatic:
        break;
    }
    if (n_qubits > d) {
        throw ValidationError("pca: cannot keep " + std::to_string(n_qubits) +
                              " components of " + std::to_string(d) + " columns");
    }
    if (n == 0) {
        return out;
    }
    std::vector<double> mean(d, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            mean[c] += x(r, c);
        }
    }
    for (auto &m : mean) {
        m /= static_cast<double>(n);
    }
    linalg::RealMatrix cov(d, d);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < d; ++i) {
            const double xi = x(r, i) - mean[i];
            for (std::size_t j = i; j < d; ++j) {
                cov(i, j) += xi * (x(r, j) - mean[j]);
            }
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            cov(i, j) /= static_cast<double>(n);
            cov(j, i) = cov(i, j);
        }
    }
    const auto eig = linalg::jacobi_eigen(cov);
    for (std::size_t k = 0; k < n_qubits; ++k) {
        const std::size_t col = d - 1 - k; // eigenvalues ascend
        std::size_t arg = 0;
        for (std::size_t i = 1; i < d; ++i) {
            if (std::abs(eig.vectors(i, col)) > std::abs(eig.vectors(arg, col))) {
                arg = i;
            }
        }
        const double sign = eig.vectors(arg, col) < 0.0 ? -1.0 : 1.0;
        for (std::size_t r = 0; r < n; ++r) {
            double s = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                s += (x(r, i) - mean[i]) * eig.vectors(i, col);
            }
            out(r, k) = sign * s;
        }
    }
    return out;
}

} // namespace qssl::data
