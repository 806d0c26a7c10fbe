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

#include "qssl/data/split.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "qssl/error.hpp"
#include "qssl/rng.hpp"

namespace qssl::data {

SplitIndices stratified_split(std::span<const int> labels, const SplitFractions &fractions,
                              std::uint64_t seed) {
    const std::array<double, 3> f{fractions.labeled, fractions.unlabeled, fractions.test};
    for (double v : f) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw ValidationError("split fractions must all be positive");
        }
    }
    if (std::abs(f[0] + f[1] + f[2] - 1.0) > 1e-9) {
        throw ValidationError("split fractions must sum to 1");
    }
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_class[labels[i]].push_back(i);
    }
    static constexpr const char *kPartNames[] = {"labeled", "unlabeled", "test"};
    Rng rng(seed);
    SplitIndices out;
    std::array<std::vector<std::size_t> *, 3> parts{&out.labeled, &out.unlabeled, &out.test};
    for (auto &[cls, rows] : by_class) {
        const auto n = static_cast<double>(rows.size());
        std::array<std::size_t, 3> take{};
        std::array<double, 3> rem{};
        std::size_t assigned = 0;
        for (std::size_t p = 0; p < 3; ++p) {
            const double q = n * f[p];
            take[p] = static_cast<std::size_t>(std::floor(q));
            rem[p] = q - std::floor(q);
            assigned += take[p];
        }
        std::array<std::size_t, 3> order{0, 1, 2};
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
        for (std::size_t k = 0; assigned < rows.size(); ++k, ++assigned) {
            ++take[order[k % 3]];
        }
        rng.shuffle(std::span<std::size_t>(rows));
        std::size_t pos = 0;
        for (std::size_t p = 0; p < 3; ++p) {
            if (take[p] == 0) {
                out.warnings.push_back("class " + std::to_string(cls) + " (" +
                                       std::to_string(rows.size()) + " rows) has no rows in the " +
                                       kPartNames[p] + " part");
            }
            parts[p]->insert(parts[p]->end(), rows.begin() + static_cast<std::ptrdiff_t>(pos),
                             rows.begin() + static_cast<std::ptrdiff_t>(pos + take[p]));
            pos += take[p];
        }
    }
    for (std::size_t p = 0; p < 3; ++p) {
        if (parts[p]->empty()) {
            throw ValidationError(std::string("split leaves the ") + kPartNames[p] +
                                  " part empty (" + std::to_string(labels.size()) + " rows)");
        }
        std::sort(parts[p]->begin(), parts[p]->end());
    }
    return out;
}

} // namespace qssl::data
