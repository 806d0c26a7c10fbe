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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qssl::qsim {

using cplx = std::complex<double>;

/// Row-major 2x2 gate {g00, g01, g10, g11}.
using Gate2 = std::array<cplx, 4>;

/// Inner loops of the simulator. Every backend implements the same table;
/// the scalar one is the reference the SIMD variants are tested against.
///
/// Single-qubit kernels address the target wire by `stride`, the basis-index
/// distance between the |..0..> and |..1..> partners (2^(n-1-wire) under the
/// big-endian wire order). Amplitude spans have power-of-two length.
struct KernelTable {
    std::string_view name;

    /// amps <- (I (x) g (x) I) amps.
    void (*apply_gate)(std::span<cplx> amps, std::size_t stride, const Gate2 &g);

    /// sum_b (+1 if the target bit of b is 0 else -1) |amps_b|^2.
    double (*expectation_z)(std::span<const cplx> amps, std::size_t stride);

    /// <bra| (I (x) g (x) I) |ket>.
    cplx (*matrix_element)(std::span<const cplx> bra, std::span<const cplx> ket,
                           std::size_t stride, const Gate2 &g);

    /// sum |amps_b|^2.
    double (*norm_sq)(std::span<const cplx> amps);

    /// Real dot product.
    double (*dot)(std::span<const double> a, std::span<const double> b);
};

const KernelTable &scalar_kernels();

/// AVX2+FMA table, or nullptr when not compiled in or unsupported by the CPU.
const KernelTable *avx2_kernels();

/// NEON table, or nullptr when not compiled in (non-ARM builds).
const KernelTable *neon_kernels();

/// Every table usable on this machine, scalar first.
std::vector<const KernelTable *> available_kernels();

/// Table used by the simulator: the widest available SIMD variant unless the
/// environment variable QSSL_SIMD names another one ("scalar", "avx2",
/// "neon"). Resolved once per process.
const KernelTable &active_kernels();

} // namespace qssl::qsim
