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

#include "qssl/eval/metrics.hpp"

#include <string>

#include "qssl/error.hpp"

namespace qssl::eval {

Confusion confusion(std::span<const int> y_true, std::span<const int> y_pred) {
    if (y_true.size() != y_pred.size()) {
        throw ShapeError("confusion: " + std::to_string(y_true.size()) + " labels vs " +
                         std::to_string(y_pred.size()) + " predictions");
    }
    if (y_true.empty()) {
        throw ShapeError("confusion: empty input");
    }
    Confusion c;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        const int t = y_true[i], p = y_pred[i];
        if ((t != 0 && t != 1) || (p != 0 && p != 1)) {
            throw ValidationError("confusion: non-binary value at index " + std::to_string(i));
        }
        if (t == 1) {
            ++(p == 1 ? c.tp : c.fn);
        } else {
            ++(p == 1 ? c.fp : c.tn);
        }
    }
    return c;
}

double f1_score(double precision, double recall) noexcept {
    const double s = precision + recall;
    return s > 0.0 ? 2.0 * precision * recall / s : 0.0;
}

MetricsReport metrics_from_confusion(const Confusion &counts) {
    const auto ratio = [](std::size_t num, std::size_t den) {
        return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
    };
    MetricsReport m;
    m.counts = counts;
    m.accuracy = ratio(counts.tp + counts.tn, counts.total());
    m.precision = ratio(counts.tp, counts.tp + counts.fp);
    m.recall = ratio(counts.tp, counts.tp + counts.fn);
    m.f1 = f1_score(m.precision, m.recall);
    return m;
}

} // namespace qssl::eval
