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

#include "qssl/linalg/qr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "qr_blocked.hpp"

namespace qssl::linalg {
namespace {

void transpose_in_place(std::vector<double> &buf, std::size_t n) {
    constexpr std::size_t tile = 64;
    for (std::size_t bi = 0; bi < n; bi += tile) {
        for (std::size_t bj = bi; bj < n; bj += tile) {
            const std::size_t ei = std::min(bi + tile, n), ej = std::min(bj + tile, n);
            for (std::size_t i = bi; i < ei; ++i) {
                for (std::size_t j = std::max(bj, i + 1); j < ej; ++j) {
                    std::swap(buf[i * n + j], buf[j * n + i]);
                }
            }
        }
    }
}

// Unblocked Householder QR on a column-major buffer; reflector conventions
// match LAPACK's dlarfg (and Eigen's makeHouseholder) so both backends
// share the apply code.
void reference_geqrf(std::vector<double> &a, std::vector<double> &tau, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        double *col = a.data() + k * n;
        const double alpha = col[k];
        double xnorm_sq = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            xnorm_sq += col[i] * col[i];
        }
        if (xnorm_sq == 0.0) {
            tau[k] = 0.0;
            continue;
        }
        const double beta = -std::copysign(std::sqrt(alpha * alpha + xnorm_sq), alpha);
        tau[k] = (beta - alpha) / beta;
        const double scale = 1.0 / (alpha - beta);
        for (std::size_t i = k + 1; i < n; ++i) {
            col[i] *= scale;
        }
        col[k] = beta;

        for (std::size_t j = k + 1; j < n; ++j) {
            double *cj = a.data() + j * n;
            double w = cj[k];
            for (std::size_t i = k + 1; i < n; ++i) {
                w += col[i] * cj[i];
            }
            w *= tau[k];
            cj[k] -= w;
            for (std::size_t i = k + 1; i < n; ++i) {
                cj[i] -= w * col[i];
            }
        }
    }
}

} // namespace

std::string_view to_string(QrBackend backend) noexcept {
    switch (backend) {
    case QrBackend::automatic:
        return "automatic";
    case QrBackend::reference:
        return "reference";
    case QrBackend::blocked:
        return "blocked";
    }
    return "unknown";
}

bool blocked_qr_available() noexcept {
#if defined(QSSL_HAVE_AVX2)
    // qr_blocked.cpp is built with -mavx2 -mfma on x86.
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return true;
#endif
}

OrthogonalFactor::OrthogonalFactor(std::size_t dim, std::vector<double> reflectors,
                                   std::vector<double> tau,
                                   std::vector<double> r_diagonal, QrBackend backend)
    : dim_{dim}, reflectors_{std::move(reflectors)}, tau_{std::move(tau)},
      signs_(dim), r_diag_(dim), backend_{backend} {
    for (std::size_t k = 0; k < dim_; ++k) {
        signs_[k] = r_diagonal[k] < 0.0 ? -1.0 : 1.0;
        r_diag_[k] = std::abs(r_diagonal[k]);
    }
}

void OrthogonalFactor::apply_reflectors(std::span<cplx> v) const {
    const std::size_t n = dim_;
    for (std::size_t kk = n; kk-- > 0;) {
        if (tau_[kk] == 0.0) {
            continue;
        }
        const double *col = reflectors_.data() + kk * n;
        cplx w = v[kk];
        for (std::size_t i = kk + 1; i < n; ++i) {
            w += col[i] * v[i];
        }
        w *= tau_[kk];
        v[kk] -= w;
        for (std::size_t i = kk + 1; i < n; ++i) {
            v[i] -= w * col[i];
        }
    }
}

void OrthogonalFactor::apply(std::span<cplx> v) const {
    if (v.size() != dim_) {
        throw ShapeError("OrthogonalFactor::apply: vector length " +
                         std::to_string(v.size()) + ", factor dimension " +
                         std::to_string(dim_));
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        v[i] *= signs_[i];
    }
    apply_reflectors(v);
}

void OrthogonalFactor::apply_batch(std::span<const std::span<cplx>> batch) const {
    for (const auto &v : batch) {
        if (v.size() != dim_) {
            throw ShapeError("OrthogonalFactor::apply_batch: vector length " +
                             std::to_string(v.size()) + ", factor dimension " +
                             std::to_string(dim_));
        }
    }
    if (backend_ != QrBackend::blocked || batch.empty()) {
        for (auto &v : batch) {
            apply(v);
        }
        return;
    }
    const std::size_t n = dim_;
    const std::size_t m = 2 * batch.size();
    std::vector<double> c(n * m);
    for (std::size_t b = 0; b < batch.size(); ++b) {
        double *re = c.data() + (2 * b) * n;
        double *im = c.data() + (2 * b + 1) * n;
        for (std::size_t i = 0; i < n; ++i) {
            re[i] = signs_[i] * batch[b][i].real();
            im[i] = signs_[i] * batch[b][i].imag();
        }
    }
    detail::blocked_apply_q(reflectors_.data(), tau_.data(), n, c.data(), m);
    for (std::size_t b = 0; b < batch.size(); ++b) {
        const double *re = c.data() + (2 * b) * n;
        const double *im = c.data() + (2 * b + 1) * n;
        for (std::size_t i = 0; i < n; ++i) {
            batch[b][i] = cplx(re[i], im[i]);
        }
    }
}

RealMatrix OrthogonalFactor::dense() const {
    RealMatrix q(dim_, dim_);
    std::vector<cplx> e(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        std::fill(e.begin(), e.end(), cplx{});
        e[j] = 1.0;
        apply(e);
        for (std::size_t i = 0; i < dim_; ++i) {
            q(i, j) = e[i].real();
        }
    }
    return q;
}

OrthogonalFactor householder_qr(RealMatrix a, QrBackend backend) {
    if (!a.square() || a.rows() == 0) {
        throw ShapeError("householder_qr: expected a non-empty square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    const std::size_t n = a.rows();
    if (backend == QrBackend::automatic) {
        backend = n > kBlockedThreshold ? QrBackend::blocked : QrBackend::reference;
    }
    if (backend == QrBackend::blocked && !blocked_qr_available()) {
        backend = QrBackend::reference;
    }
    std::vector<double> buf = std::move(a).release();
    transpose_in_place(buf, n);
    std::vector<double> tau(n, 0.0);

    if (backend == QrBackend::blocked) {
        detail::blocked_geqrf(buf.data(), tau.data(), n);
    } else {
        reference_geqrf(buf, tau, n);
    }

    std::vector<double> r_diag(n);
    double r_max = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        r_diag[k] = buf[k * n + k];
        r_max = std::max(r_max, std::abs(r_diag[k]));
    }
    const double tol =
        static_cast<double>(n) * std::numeric_limits<double>::epsilon() * r_max;
    for (std::size_t k = 0; k < n; ++k) {
        if (!(std::abs(r_diag[k]) > tol)) {
            throw NumericalError("householder_qr: rank deficient, |R[" +
                                 std::to_string(k) + "," + std::to_string(k) +
                                 "]| = " + std::to_string(std::abs(r_diag[k])));
        }
    }
    return {n, std::move(buf), std::move(tau), std::move(r_diag), backend};
}

} // namespace qssl::linalg
