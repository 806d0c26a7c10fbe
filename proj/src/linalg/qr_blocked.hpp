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

namespace qssl::linalg::detail {

/// In-place Householder QR of a column-major n x n buffer. On return the
/// upper triangle holds R and the strict lower triangle the reflector tails;
/// tau receives the n reflector scales.
void blocked_geqrf(double *a, double *tau, std::size_t n);

/// c <- H_0 H_1 ... H_{n-1} c for a column-major n x cols block `c`.
void blocked_apply_q(const double *reflectors, const double *tau, std::size_t n, double *c,
                     std::size_t cols);

} // namespace qssl::linalg::detail
