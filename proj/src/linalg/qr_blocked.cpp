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

#include "qr_blocked.hpp"

#include <Eigen/Householder>
#include <Eigen/QR>

namespace qssl::linalg::detail {

namespace {
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor>;
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1>;

// Panel width of the blocked factorization.
constexpr Eigen::Index kPanel = 128;
} // namespace

void blocked_geqrf(double *a, double *tau, std::size_t n) {
    const auto en = static_cast<Eigen::Index>(n);
    Eigen::Map<Mat> m(a, en, en);
    Eigen::Map<Vec> h(tau, en);
    Vec work(en);
    Eigen::internal::householder_qr_inplace_blocked<Eigen::Map<Mat>, Eigen::Map<Vec>>::run(
        m, h, kPanel, work.data());
}

void blocked_apply_q(const double *reflectors, const double *tau, std::size_t n, double *c,
                     std::size_t cols) {
    const auto en = static_cast<Eigen::Index>(n);
    Eigen::Map<const Mat> refl(reflectors, en, en);
    Eigen::Map<const Vec> coeffs(tau, en);
    Eigen::Map<Mat> block(c, en, static_cast<Eigen::Index>(cols));
    block.applyOnTheLeft(Eigen::householderSequence(refl, coeffs));
}

} // namespace qssl::linalg::detail
