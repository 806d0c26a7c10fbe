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

#include "qssl/linalg/matrix.hpp"
#include "qssl/linalg/qr.hpp"
#include "qssl/vqc/ansatz.hpp"

namespace qssl::vqc {

/// Diagonal shift applied before the single retry on a rank-deficient input.
inline constexpr double kRankPerturbation = 1e-8;

/// Resizes `adjacency` to D x D with D = 2^n_qubits. Larger inputs are
/// truncated to their leading block. Smaller ones are padded: new diagonal
/// entries are one uniform(0,1) draw, new off-diagonal pairs share the mean
/// of two draws, so the padded matrix stays symmetric.
linalg::RealMatrix resize_adjacency(const linalg::RealMatrix &adjacency, std::size_t n_qubits,
                                    std::uint64_t seed);

/// Orthogonal factor of the QR of the resized adjacency, with diag(R) >= 0.
/// On a rank-deficient matrix the diagonal is shifted by kRankPerturbation
/// and the factorization retried once.
linalg::OrthogonalFactor
embed_adjacency_factor(const linalg::RealMatrix &adjacency, std::size_t n_qubits,
                       std::uint64_t seed,
                       linalg::QrBackend backend = linalg::QrBackend::automatic);

/// embed_adjacency_factor wrapped for use in a CircuitConfig.
EmbedUnitary embed_adjacency_unitary(const linalg::RealMatrix &adjacency, std::size_t n_qubits,
                                     std::uint64_t seed,
                                     linalg::QrBackend backend = linalg::QrBackend::automatic);

} // namespace qssl::vqc
