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

#include <cstdlib>
#include <string_view>

namespace qssl::qsim {

namespace detail {
#if defined(QSSL_HAVE_AVX2)
const KernelTable &avx2_kernel_table();
#endif
#if defined(QSSL_HAVE_NEON)
const KernelTable &neon_kernel_table();
#endif
} // namespace detail

const KernelTable *avx2_kernels() {
#if defined(QSSL_HAVE_AVX2)
    static const bool supported =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &detail::avx2_kernel_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable *neon_kernels() {
#if defined(QSSL_HAVE_NEON)
    return &detail::neon_kernel_table();
#else
    return nullptr;
#endif
}

std::vector<const KernelTable *> available_kernels() {
    std::vector<const KernelTable *> out{&scalar_kernels()};
    if (const auto *k = avx2_kernels()) {
        out.push_back(k);
    }
    if (const auto *k = neon_kernels()) {
        out.push_back(k);
    }
    return out;
}

namespace {

const KernelTable &select_kernels() {
    const auto tables = available_kernels();
    if (const char *env = std::getenv("QSSL_SIMD")) {
        const std::string_view wanted{env};
        for (const auto *t : tables) {
            if (t->name == wanted) {
                return *t;
            }
        }
    }
    return *tables.back();
}

} // namespace

const KernelTable &active_kernels() {
    static const KernelTable &table = select_kernels();
    return table;
}

} // namespace qssl::qsim
