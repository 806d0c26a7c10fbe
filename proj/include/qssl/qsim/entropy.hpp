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
#include "qssl/qsim/state_vector.hpp"

namespace qssl::qsim {

/// Eigenvalues below this contribute nothing to the entropy sum.
inline constexpr double kEntropyClamp = 1e-12;

/// Reduced density matrix of the `keep` wires, tracing out the rest.
///
/// The subsystem basis is big-endian in the order the wires are listed.
/// `keep` must be a nonempty proper subset of distinct, in-range wires.
linalg::ComplexMatrix reduced_density(const StateVector &state,
                                      std::span<const std::size_t> keep);

/// -sum lambda log2 lambda over the given spectrum, skipping lambda < kEntropyClamp.
double von_neumann_entropy(std::span<const double> eigenvalues);

/// Entanglement entropy in bits between `keep` and its complement.
double entanglement_entropy(const StateVector &state, std::span<const std::size_t> keep);

/// Wires {0, ..., count-1}.
std::vector<std::size_t> leading_wires(std::size_t count);

/// ceil(n / 2), the default subsystem size for reported entropies.
constexpr std::size_t default_partition(std::size_t n_qubits) {
    return (n_qubits + 1) / 2;
}

} // namespace qssl::qsim
