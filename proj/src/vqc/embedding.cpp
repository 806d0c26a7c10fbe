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

#include "qssl/vqc/embedding.hpp"

#include <algorithm>
#include <string>

#include "qssl/error.hpp"
#include "qssl/qsim/state_vector.hpp"
#include "qssl/rng.hpp"

namespace qssl::vqc {

linalg::RealMatrix resize_adjacency(const linalg::RealMatrix &adjacency, std::size_t n_qubits,
                                    std::uint64_t seed) {
    if (n_qubits < 1 || n_qubits > qsim::kMaxQubits) {
        throw CapacityError("embedding qubit count " + std::to_string(n_qubits) +
                            " outside [1, " + std::to_string(qsim::kMaxQubits) + "]");
    }
    if (!adjacency.square()) {
        throw ShapeError("adjacency must be square");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t keep = std::min(dim, adjacency.rows());
    linalg::RealMatrix out(dim, dim);
    for (std::size_t i = 0; i < keep; ++i) {
        std::copy_n(adjacency.row(i).begin(), keep, out.row(i).begin());
    }
    if (keep == dim) {
        return out;
    }
    Rng rng(seed);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = std::max(i, keep); j < dim; ++j) {
            if (i == j) {
                out(i, i) = rng.uniform();
            } else {
                const double v = 0.5 * (rng.uniform() + rng.uniform());
                out(i, j) = v;
                out(j, i) = v;
            }
        }
    }
    return out;
}

linalg::OrthogonalFactor embed_adjacency_factor(const linalg::RealMatrix &adjacency,
                                                std::size_t n_qubits, std::uint64_t seed,
                                                linalg::QrBackend backend) {
    try {
        return linalg::householder_qr(resize_adjacency(adjacency, n_qubits, seed), backend);
    } catch (const NumericalError &) {
        // Rebuilt rather than kept from the first attempt: at 14 qubits the
        // matrix is 2 GiB and the QR consumes it.
        auto shifted = resize_adjacency(adjacency, n_qubits, seed);
        for (std::size_t i = 0; i < shifted.rows(); ++i) {
            shifted(i, i) += kRankPerturbation;
        }
        try {
            return linalg::householder_qr(std::move(shifted), backend);
        } catch (const NumericalError &e) {
            throw NumericalError(std::string("adjacency embedding is rank deficient after "
                                             "diagonal perturbation: ") +
                                 e.what());
        }
    }
}

EmbedUnitary embed_adjacency_unitary(const linalg::RealMatrix &adjacency, std::size_t n_qubits,
                                     std::uint64_t seed, linalg::QrBackend backend) {
    return EmbedUnitary(embed_adjacency_factor(adjacency, n_qubits, seed, backend));
}

} // namespace qssl::vqc
