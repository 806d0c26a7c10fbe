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

// AVX2 + FMA variants of the simulator kernels. This translation unit is
// compiled with -mavx2 -mfma and must only be entered after a runtime CPU
// check (see kernels_dispatch.cpp).

#include "qssl/qsim/kernels.hpp"

#include <immintrin.h>

namespace qssl::qsim::detail {
namespace {

// One __m256d holds two complex doubles: [re0, im0, re1, im1].

inline __m256d load2(const cplx *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(cplx *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline __m256d swap_re_im(__m256d a) { return _mm256_permute_pd(a, 0x5); }

// (re + i im) * a, with re/im broadcast to all lanes.
inline __m256d cmul_scalar(__m256d re, __m256d im, __m256d a) {
    return _mm256_fmaddsub_pd(re, a, _mm256_mul_pd(im, swap_re_im(a)));
}

// Lane-wise complex product c * x.
inline __m256d cmul(__m256d c, __m256d x) {
    const __m256d cre = _mm256_movedup_pd(c);
    const __m256d cim = _mm256_permute_pd(c, 0xF);
    return _mm256_fmaddsub_pd(cre, x, _mm256_mul_pd(cim, swap_re_im(x)));
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

struct BroadcastGate {
    __m256d re[4];
    __m256d im[4];
    explicit BroadcastGate(const Gate2 &g) {
        for (int k = 0; k < 4; ++k) {
            re[k] = _mm256_set1_pd(g[k].real());
            im[k] = _mm256_set1_pd(g[k].imag());
        }
    }
};

// For stride 1 the partners share a register; column vectors of g are
// packed so that [g00, g10] * [c0, c0] + [g01, g11] * [c1, c1] is the result.
struct PackedGate {
    __m256d col0;
    __m256d col1;
    explicit PackedGate(const Gate2 &g)
        : col0{_mm256_setr_pd(g[0].real(), g[0].imag(), g[2].real(), g[2].imag())},
          col1{_mm256_setr_pd(g[1].real(), g[1].imag(), g[3].real(), g[3].imag())} {}

    [[nodiscard]] __m256d apply(__m256d pair) const {
        const __m256d lo = _mm256_permute2f128_pd(pair, pair, 0x00);
        const __m256d hi = _mm256_permute2f128_pd(pair, pair, 0x11);
        return _mm256_add_pd(cmul(col0, lo), cmul(col1, hi));
    }
};

void apply_gate(std::span<cplx> amps, std::size_t stride, const Gate2 &g) {
    const std::size_t dim = amps.size();
    cplx *p = amps.data();
    if (stride == 1) {
        const PackedGate pg(g);
        for (std::size_t i = 0; i < dim; i += 2) {
            store2(p + i, pg.apply(load2(p + i)));
        }
        return;
    }
    const BroadcastGate bg(g);
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = 0; k < stride; k += 2) {
            cplx *p0 = p + block + k;
            cplx *p1 = p0 + stride;
            const __m256d a0 = load2(p0);
            const __m256d a1 = load2(p1);
            const __m256d n0 = _mm256_add_pd(cmul_scalar(bg.re[0], bg.im[0], a0),
                                             cmul_scalar(bg.re[1], bg.im[1], a1));
            const __m256d n1 = _mm256_add_pd(cmul_scalar(bg.re[2], bg.im[2], a0),
                                             cmul_scalar(bg.re[3], bg.im[3], a1));
            store2(p0, n0);
            store2(p1, n1);
        }
    }
}

double expectation_z(std::span<const cplx> amps, std::size_t stride) {
    const std::size_t dim = amps.size();
    const cplx *p = amps.data();
    __m256d acc = _mm256_setzero_pd();
    if (stride == 1) {
        const __m256d sign = _mm256_setr_pd(1.0, 1.0, -1.0, -1.0);
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d a = load2(p + i);
            acc = _mm256_fmadd_pd(_mm256_mul_pd(a, sign), a, acc);
        }
        return hsum(acc);
    }
    __m256d neg = _mm256_setzero_pd();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = 0; k < stride; k += 2) {
            const __m256d a0 = load2(p + block + k);
            const __m256d a1 = load2(p + block + k + stride);
            acc = _mm256_fmadd_pd(a0, a0, acc);
            neg = _mm256_fmadd_pd(a1, a1, neg);
        }
    }
    return hsum(_mm256_sub_pd(acc, neg));
}

cplx matrix_element(std::span<const cplx> bra, std::span<const cplx> ket,
                    std::size_t stride, const Gate2 &g) {
    const std::size_t dim = ket.size();
    const cplx *b = bra.data();
    const cplx *k = ket.data();
    // conj(b) * t = (br tr + bi ti) + i (br ti - bi tr)
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    if (stride == 1) {
        const PackedGate pg(g);
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d t = pg.apply(load2(k + i));
            const __m256d br = load2(b + i);
            acc_re = _mm256_fmadd_pd(br, t, acc_re);
            acc_im = _mm256_fmadd_pd(br, swap_re_im(t), acc_im);
        }
    } else {
        const BroadcastGate bg(g);
        for (std::size_t block = 0; block < dim; block += 2 * stride) {
            for (std::size_t j = 0; j < stride; j += 2) {
                const std::size_t i0 = block + j;
                const std::size_t i1 = i0 + stride;
                const __m256d k0 = load2(k + i0);
                const __m256d k1 = load2(k + i1);
                const __m256d t0 = _mm256_add_pd(cmul_scalar(bg.re[0], bg.im[0], k0),
                                                 cmul_scalar(bg.re[1], bg.im[1], k1));
                const __m256d t1 = _mm256_add_pd(cmul_scalar(bg.re[2], bg.im[2], k0),
                                                 cmul_scalar(bg.re[3], bg.im[3], k1));
                const __m256d b0 = load2(b + i0);
                const __m256d b1 = load2(b + i1);
                acc_re = _mm256_fmadd_pd(b0, t0, acc_re);
                acc_re = _mm256_fmadd_pd(b1, t1, acc_re);
                acc_im = _mm256_fmadd_pd(b0, swap_re_im(t0), acc_im);
                acc_im = _mm256_fmadd_pd(b1, swap_re_im(t1), acc_im);
            }
        }
    }
    const __m256d alt = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    return {hsum(acc_re), hsum(_mm256_mul_pd(acc_im, alt))};
}

double norm_sq(std::span<const cplx> amps) {
    const std::size_t dim = amps.size();
    const cplx *p = amps.data();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= dim; i += 2) {
        const __m256d a = load2(p + i);
        acc = _mm256_fmadd_pd(a, a, acc);
    }
    double tail = 0.0;
    for (; i < dim; ++i) {
        tail += std::norm(p[i]);
    }
    return hsum(acc) + tail;
}

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i),
                              acc);
    }
    double tail = 0.0;
    for (; i < n; ++i) {
        tail += a[i] * b[i];
    }
    return hsum(acc) + tail;
}

constexpr KernelTable kAvx2{
    "avx2", apply_gate, expectation_z, matrix_element, norm_sq, dot,
};

} // namespace

const KernelTable &avx2_kernel_table() { return kAvx2; }

} // namespace qssl::qsim::detail
