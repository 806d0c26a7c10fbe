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

namespace qssl::eval {

struct Confusion {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;

    [[nodiscard]] std::size_t total() const noexcept { return tp + fp + fn + tn; }
    bool operator==(const Confusion &) const = default;
};

/// Counts and the four scores derived from them. A ratio whose denominator
/// is zero is reported as 0.
struct MetricsReport {
    Confusion counts;
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Positive class is 1. Throws ShapeError on length mismatch or empty input,
/// ValidationError on a value outside {0, 1}.
Confusion confusion(std::span<const int> y_true, std::span<const int> y_pred);

MetricsReport metrics_from_confusion(const Confusion &counts);

/// F1 from precision and recall alone; 0 when both are 0.
double f1_score(double precision, double recall) noexcept;

} // namespace qssl::eval
