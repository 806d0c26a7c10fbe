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

#include "qssl/linalg/solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace qssl::linalg {

RealMatrix solve(RealMatrix a, RealMatrix b) {
    if (!a.square()) {
        throw ShapeError("solve: coefficient matrix is not square");
    }
    if (b.rows() != a.rows()) {
        throw ShapeError("solve: right-hand side has " + std::to_string(b.rows()) +
                         " rows, expected " + std::to_string(a.rows()));
    }
    const std::size_t n = a.rows();
    const double eps = std::numeric_limits<double>::epsilon();

    double max_pivot = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) {
                piv = i;
            }
        }
        const double p = std::abs(a(piv, k));
        max_pivot = std::max(max_pivot, p);
        if (!(p > static_cast<double>(n) * eps * max_pivot) || !std::isfinite(p)) {
            std::ostringstream msg;
            msg << "solve: singular system at column " << k << " (pivot ratio "
                << (max_pivot > 0.0 ? p / max_pivot : 0.0) << ")";
            throw NumericalError(msg.str());
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(piv, j));
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                std::swap(b(k, j), b(piv, j));
            }
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            if (f == 0.0) {
                continue;
            }
            a(i, k) = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) -= f * a(k, j);
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                b(i, j) -= f * b(k, j);
            }
        }
    }

    RealMatrix x(n, b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t ii = n; ii-- > 0;) {
            double s = b(ii, c);
            for (std::size_t j = ii + 1; j < n; ++j) {
                s -= a(ii, j) * x(j, c);
            }
            x(ii, c) = s / a(ii, ii);
        }
    }
    return x;
}

} // namespace qssl::linalg
