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

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qssl/linalg/matrix.hpp"

namespace qssl::linalg {

enum class QrBackend {
    automatic, ///< reference up to kBlockedThreshold, blocked above
    reference, ///< unblocked Householder, one reflector at a time
    blocked,   ///< cache-blocked Householder (Eigen), vectorized
};

/// Square dimension above which `automatic` switches to the blocked backend.
inline constexpr std::size_t kBlockedThreshold = 512;

[[nodiscard]] std::string_view to_string(QrBackend backend) noexcept;

/// False on x86 CPUs without AVX2/FMA, where `blocked` requests run the
/// reference code instead.
[[nodiscard]] bool blocked_qr_available() noexcept;

/// Orthogonal factor Q of a square Householder QR, normalized so that
/// diag(R) >= 0, kept in compact reflector form.
///
/// Storage follows the LAPACK geqrf convention: column k of the column-major
/// buffer holds reflector v_k below the diagonal (v_k[k] = 1 implicit) and
/// H_k = I - tau_k v_k v_k^T. With S = diag(sign(R_kk)),
/// Q = H_0 H_1 ... H_{n-1} S.
class OrthogonalFactor {
  public:
    OrthogonalFactor(std::size_t dim, std::vector<double> reflectors,
                     std::vector<double> tau, std::vector<double> r_diagonal,
                     QrBackend backend);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] QrBackend backend() const noexcept { return backend_; }

    /// Diagonal of R after sign normalization (all entries >= 0).
    [[nodiscard]] std::span<const double> r_diagonal() const noexcept {
        return r_diag_;
    }

    /// v <- Q v.
    void apply(std::span<cplx> v) const;

    /// Applies Q to every vector of the batch, as one blocked product when
    /// the factor came from the blocked backend.
    void apply_batch(std::span<const std::span<cplx>> batch) const;

    /// Materializes Q; O(dim^3), meant for tests and small registers.
    [[nodiscard]] RealMatrix dense() const;

  private:
    void apply_reflectors(std::span<cplx> v) const;

    std::size_t dim_;
    std::vector<double> reflectors_; // column-major dim x dim
    std::vector<double> tau_;
    std::vector<double> signs_;
    std::vector<double> r_diag_;
    QrBackend backend_;
};

/// Householder QR of a square matrix, consuming it.
///
/// Throws NumericalError when R has a diagonal entry below
/// dim * eps * max|R_kk|, i.e. the input is numerically rank deficient.
OrthogonalFactor householder_qr(RealMatrix a, QrBackend backend = QrBackend::automatic);

} // namespace qssl::linalg
