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

// NEON variants of the simulator kernels (AArch64 only). One float64x2_t
// holds a single complex double [re, im].

#include "qssl/qsim/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace qssl::qsim::detail {
namespace {

inline float64x2_t load1(const cplx *p) {
    return vld1q_f64(reinterpret_cast<const double *>(p));
}

inline void store1(cplx *p, float64x2_t v) {
    vst1q_f64(reinterpret_cast<double *>(p), v);
}

// (c.re + i c.im) * a
inline float64x2_t cmul(const cplx &c, float64x2_t a) {
    const float64x2_t swapped = vextq_f64(a, a, 1);                 // [ai, ar]
    const float64x2_t im_term = vmulq_n_f64(swapped, c.imag());     // [c.im ai, c.im ar]
    const float64x2_t signed_im = vmulq_f64(im_term, float64x2_t{-1.0, 1.0});
    return vfmaq_n_f64(signed_im, a, c.real());
}

void apply_gate(std::span<cplx> amps, std::size_t stride, const Gate2 &g) {
    const std::size_t dim = amps.size();
    cplx *p = amps.data();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            cplx *p0 = p + block + k;
            cplx *p1 = p0 + stride;
            const float64x2_t a0 = load1(p0);
            const float64x2_t a1 = load1(p1);
            store1(p0, vaddq_f64(cmul(g[0], a0), cmul(g[1], a1)));
            store1(p1, vaddq_f64(cmul(g[2], a0), cmul(g[3], a1)));
        }
    }
}

double expectation_z(std::span<const cplx> amps, std::size_t stride) {
    const std::size_t dim = amps.size();
    const cplx *p = amps.data();
    float64x2_t pos = vdupq_n_f64(0.0);
    float64x2_t neg = vdupq_n_f64(0.0);
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            const float64x2_t a0 = load1(p + block + k);
            const float64x2_t a1 = load1(p + block + k + stride);
            pos = vfmaq_f64(pos, a0, a0);
            neg = vfmaq_f64(neg, a1, a1);
        }
    }
    return vaddvq_f64(vsubq_f64(pos, neg));
}

cplx matrix_element(std::span<const cplx> bra, std::span<const cplx> ket,
                    std::size_t stride, const Gate2 &g) {
    const std::size_t dim = ket.size();
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = 0; k < stride; ++k) {
            const std::size_t i0 = block + k;
            const std::size_t i1 = i0 + stride;
            const float64x2_t k0 = load1(&ket[i0]);
            const float64x2_t k1 = load1(&ket[i1]);
            const float64x2_t t0 = vaddq_f64(cmul(g[0], k0), cmul(g[1], k1));
            const float64x2_t t1 = vaddq_f64(cmul(g[2], k0), cmul(g[3], k1));
            const float64x2_t b0 = load1(&bra[i0]);
            const float64x2_t b1 = load1(&bra[i1]);
            acc_re = vfmaq_f64(acc_re, b0, t0);
            acc_re = vfmaq_f64(acc_re, b1, t1);
            acc_im = vfmaq_f64(acc_im, b0, vextq_f64(t0, t0, 1));
            acc_im = vfmaq_f64(acc_im, b1, vextq_f64(t1, t1, 1));
        }
    }
    return {vaddvq_f64(acc_re), vgetq_lane_f64(acc_im, 0) - vgetq_lane_f64(acc_im, 1)};
}

double norm_sq(std::span<const cplx> amps) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (const cplx &a : amps) {
        const float64x2_t v = load1(&a);
        acc = vfmaq_f64(acc, v, v);
    }
    return vaddvq_f64(acc);
}

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vfmaq_f64(acc, vld1q_f64(a.data() + i), vld1q_f64(b.data() + i));
    }
    double tail = 0.0;
    for (; i < n; ++i) {
        tail += a[i] * b[i];
    }
    return vaddvq_f64(acc) + tail;
}

constexpr KernelTable kNeon{
    "neon", apply_gate, expectation_z, matrix_element, norm_sq, dot,
};

} // namespace

const KernelTable &neon_kernel_table() { return kNeon; }

} // namespace qssl::qsim::detail

#endif
