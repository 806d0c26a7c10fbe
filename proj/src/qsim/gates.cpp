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

#include "qssl/qsim/gates.hpp"

#include <cmath>
#include <numbers>

namespace qssl::qsim::gates {

using namespace std::complex_literals;

Gate2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
Gate2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Gate2 pauli_y() { return {0.0, -1i, 1i, 0.0}; }
Gate2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Gate2 hadamard() {
    const double h = std::numbers::sqrt2 / 2.0;
    return {h, h, h, -h};
}

Gate2 rx(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {c, -1i * s, -1i * s, c};
}

Gate2 ry(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {c, -s, s, c};
}

Gate2 rz(double theta) {
    return {std::polar(1.0, -theta / 2.0), 0.0, 0.0, std::polar(1.0, theta / 2.0)};
}

Gate2 multiply(const Gate2 &a, const Gate2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Gate2 rot(double phi, double theta, double omega) {
    return multiply(rz(omega), multiply(ry(theta), rz(phi)));
}

Gate2 adjoint(const Gate2 &g) {
    return {std::conj(g[0]), std::conj(g[2]), std::conj(g[1]), std::conj(g[3])};
}

GateMatrix to_matrix(const Gate2 &g) { return GateMatrix{{g[0], g[1]}, {g[2], g[3]}}; }

Gate2 from_matrix(const GateMatrix &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw ShapeError("single-qubit gate must be 2x2, got " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()));
    }
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

} // namespace qssl::qsim::gates
