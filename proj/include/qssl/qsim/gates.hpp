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

#include "qssl/linalg/matrix.hpp"
#include "qssl/qsim/kernels.hpp"

namespace qssl::qsim {

/// Dense gate matrix of dimension 2^k; unitarity is checked where it is
/// consumed.
using GateMatrix = linalg::ComplexMatrix;

inline constexpr double kUnitarityTol = 1e-10;

namespace gates {

Gate2 identity();
Gate2 pauli_x();
Gate2 pauli_y();
Gate2 pauli_z();
Gate2 hadamard();

/// exp(-i theta X / 2)
Gate2 rx(double theta);
/// exp(-i theta Y / 2)
Gate2 ry(double theta);
/// exp(-i theta Z / 2)
Gate2 rz(double theta);

/// RZ(phi), then RY(theta), then RZ(omega): the matrix RZ(omega) RY(theta) RZ(phi).
Gate2 rot(double phi, double theta, double omega);

Gate2 multiply(const Gate2 &a, const Gate2 &b);
Gate2 adjoint(const Gate2 &g);

GateMatrix to_matrix(const Gate2 &g);
Gate2 from_matrix(const GateMatrix &m);

} // namespace gates
} // namespace qssl::qsim
