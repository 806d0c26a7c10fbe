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

#include "qssl/qsim/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qssl/linalg/eigen.hpp"

namespace qssl::qsim {

linalg::ComplexMatrix reduced_density(const StateVector &state,
                                      std::span<const std::size_t> keep) {
    const std::size_t n = state.n_qubits();
    if (keep.empty() || keep.size() >= n) {
        throw ValidationError("reduced_density: keep must be a nonempty proper subset of " +
                              std::to_string(n) + " wires, got " +
                              std::to_string(keep.size()));
    }
    std::vector<bool> kept(n, false);
    for (const std::size_t w : keep) {
        if (w >= n) {
            throw IndexError("reduced_density: wire " + std::to_string(w) +
                             " out of range");
        }
        if (kept[w]) {
            throw ValidationError("reduced_density: wire " + std::to_string(w) +
                                  " listed twice");
        }
        kept[w] = true;
    }
    std::vector<std::size_t> traced;
    for (std::size_t w = 0; w < n; ++w) {
        if (!kept[w]) {
            traced.push_back(w);
        }
    }

    // Reshape psi into M(a, e) with a over kept wires and e over traced
    // wires; rho_A = M M^H.
    const std::size_t dim_a = std::size_t{1} << keep.size();
    const std::size_t dim_e = std::size_t{1} << traced.size();
    linalg::ComplexMatrix m(dim_a, dim_e);
    const auto amps = state.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        std::size_t a = 0;
        for (const std::size_t w : keep) {
            a = (a << 1U) | ((b >> (n - 1 - w)) & 1U);
        }
        std::size_t e = 0;
        for (const std::size_t w : traced) {
            e = (e << 1U) | ((b >> (n - 1 - w)) & 1U);
        }
        m(a, e) = amps[b];
    }

    linalg::ComplexMatrix rho(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i) {
        const auto ri = m.row(i);
        for (std::size_t j = i; j < dim_a; ++j) {
            const auto rj = m.row(j);
            cplx acc{};
            for (std::size_t e = 0; e < dim_e; ++e) {
                acc += ri[e] * std::conj(rj[e]);
            }
            rho(i, j) = acc;
            rho(j, i) = std::conj(acc);
        }
        rho(i, i) = rho(i, i).real();
    }
    return rho;
}

double von_neumann_entropy(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (const double lambda : eigenvalues) {
        if (lambda >= kEntropyClamp) {
            s -= lambda * std::log2(lambda);
        }
    }
    return std::max(s, 0.0);
}

double entanglement_entropy(const StateVector &state, std::span<const std::size_t> keep) {
    const auto rho = reduced_density(state, keep);
    const auto spectrum = linalg::eigvals_hermitian(rho, 1e-10);
    return von_neumann_entropy(spectrum);
}

std::vector<std::size_t> leading_wires(std::size_t count) {
    std::vector<std::size_t> w(count);
    std::iota(w.begin(), w.end(), std::size_t{0});
    return w;
}

} // namespace qssl::qsim
