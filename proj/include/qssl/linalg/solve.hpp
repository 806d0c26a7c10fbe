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

#include "qssl/linalg/matrix.hpp"

namespace qssl::linalg {

/// Solves A X = B by Gaussian elimination with partial pivoting.
///
/// Throws NumericalError when a pivot falls below n * eps times the largest
/// pivot seen; the message reports that pivot ratio as a condition estimate.
RealMatrix solve(RealMatrix a, RealMatrix b);

} // namespace qssl::linalg
