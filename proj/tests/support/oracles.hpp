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

// Brute-force reference implementations used as test oracles. Nothing here
// calls into the library code it is compared against.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Dense = std::vector<std::vector<cplx>>;

inline Dense zeros(std::size_t r, std::size_t c) { return Dense(r, std::vector<cplx>(c)); }

inline Dense eye(std::size_t n) {
    Dense m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Dense mul(const Dense &a, const Dense &b) {
    Dense c = zeros(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            for (std::size_t j = 0; j < b[0].size(); ++j) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

inline Dense kron(const Dense &a, const Dense &b) {
    Dense k = zeros(a.size() * b.size(), a[0].size() * b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[0].size(); ++j) {
            for (std::size_t p = 0; p < b.size(); ++p) {
                for (std::size_t q = 0; q < b[0].size(); ++q) {
                    k[i * b.size() + p][j * b[0].size() + q] = a[i][j] * b[p][q];
                }
            }
        }
    }
    return k;
}

inline std::vector<cplx> apply(const Dense &m, const std::vector<cplx> &v) {
    std::vector<cplx> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

inline Dense rx(double t) {
    const cplx c = std::cos(t / 2), s = cplx(0, -std::sin(t / 2));
    return {{c, s}, {s, c}};
}
inline Dense ry(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return {{c, -s}, {s, c}};
}
inline Dense rz(double t) {
    return {{std::polar(1.0, -t / 2), 0.0}, {0.0, std::polar(1.0, t / 2)}};
}

/// gate on `wire` of an n-qubit register, wire 0 leftmost in the Kronecker product.
inline Dense lift(const Dense &g, std::size_t wire, std::size_t n) {
    Dense m = {{1.0}};
    for (std::size_t w = 0; w < n; ++w) {
        m = kron(m, w == wire ? g : eye(2));
    }
    return m;
}

/// Permutation matrix of CNOT, built by enumerating basis states bit by bit.
inline Dense cnot(std::size_t control, std::size_t target, std::size_t n) {
    const std::size_t d = std::size_t{1} << n;
    Dense m = zeros(d, d);
    for (std::size_t b = 0; b < d; ++b) {
        std::vector<int> bits(n);
        for (std::size_t w = 0; w < n; ++w) {
            bits[w] = static_cast<int>((b >> (n - 1 - w)) & 1U);
        }
        if (bits[control] == 1) {
            bits[target] ^= 1;
        }
        std::size_t out = 0;
        for (std::size_t w = 0; w < n; ++w) {
            out = out * 2 + static_cast<std::size_t>(bits[w]);
        }
        m[out][b] = 1.0;
    }
    return m;
}

inline double expect_z(const std::vector<cplx> &psi, std::size_t wire, std::size_t n) {
    double s = 0.0;
    for (std::size_t b = 0; b < psi.size(); ++b) {
        const int bit = static_cast<int>((b >> (n - 1 - wire)) & 1U);
        s += (bit == 0 ? 1.0 : -1.0) * std::norm(psi[b]);
    }
    return s;
}

/// Haar-ish random normalized state (complex Gaussian entries).
inline std::vector<cplx> random_state(std::size_t n, std::mt19937_64 &gen) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> v(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : v) {
        a = cplx(g(gen), g(gen));
        norm += std::norm(a);
    }
    for (auto &a : v) {
        a /= std::sqrt(norm);
    }
    return v;
}

/// Partial trace by summing the full outer product |psi><psi| over the
/// traced-out bits.
inline Dense partial_trace(const std::vector<cplx> &psi, std::size_t n,
                           const std::vector<std::size_t> &keep) {
    const std::size_t d = psi.size();
    Dense full = zeros(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            full[i][j] = psi[i] * std::conj(psi[j]);
        }
    }
    auto bit = [n](std::size_t b, std::size_t w) { return (b >> (n - 1 - w)) & 1U; };
    std::vector<bool> kept(n, false);
    for (auto w : keep) {
        kept[w] = true;
    }
    const std::size_t dk = std::size_t{1} << keep.size();
    Dense rho = zeros(dk, dk);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            bool same_env = true;
            for (std::size_t w = 0; w < n; ++w) {
                if (!kept[w] && bit(i, w) != bit(j, w)) {
                    same_env = false;
                }
            }
            if (!same_env) {
                continue;
            }
            std::size_t a = 0, b = 0;
            for (auto w : keep) {
                a = a * 2 + bit(i, w);
                b = b * 2 + bit(j, w);
            }
            rho[a][b] += full[i][j];
        }
    }
    return rho;
}

} // namespace oracle
