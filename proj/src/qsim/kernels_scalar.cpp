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

#include "qssl/qsim/kernels.hpp"

namespace qssl::qsim {
namespace {

void apply_gate(std::span<cplx> amps, std::size_t stride, const Gate2 &g) {
    const std::size_t dim = amps.size();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            const std::size_t i0 = block + k;
            const std::size_t i1 = i0 + stride;
            const cplx a0 = amps[i0];
            const cplx a1 = amps[i1];
            amps[i0] = g[0] * a0 + g[1] * a1;
            amps[i1] = g[2] * a0 + g[3] * a1;
        }
    }
}

double expectation_z(std::span<const cplx> amps, std::size_t stride) {
    const std::size_t dim = amps.size();
    double acc = 0.0;
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            acc += std::norm(amps[block + k]) - std::norm(amps[block + k + stride]);
        }
    }
    return acc;
}

cplx matrix_element(std::span<const cplx> bra, std::span<const cplx> ket,
                    std::size_t stride, const Gate2 &g) {
    const std::size_t dim = ket.size();
    cplx acc{};
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            const std::size_t i0 = block + k;
            const std::size_t i1 = i0 + stride;
            const cplx t0 = g[0] * ket[i0] + g[1] * ket[i1];
            const cplx t1 = g[2] * ket[i0] + g[3] * ket[i1];
            acc += std::conj(bra[i0]) * t0 + std::conj(bra[i1]) * t1;
        }
    }
    return acc;
}

double norm_sq(std::span<const cplx> amps) {
    double acc = 0.0;
    for (const cplx &a : amps) {
        acc += std::norm(a);
    }
    return acc;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

constexpr KernelTable kScalar{
    "scalar", apply_gate, expectation_z, matrix_element, norm_sq, dot,
};

} // namespace

const KernelTable &scalar_kernels() { return kScalar; }

} // namespace qssl::qsim
