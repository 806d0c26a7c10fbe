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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qssl::data {

struct SplitFractions {
    double labeled = 0.2;
    double unlabeled = 0.5;
    double test = 0.3;

    bool operator==(const SplitFractions &) const = default;
};

/// Disjoint row sets covering [0, N), each sorted ascending.
struct SplitIndices {
    std::vector<std::size_t> labeled;
    std::vector<std::size_t> unlabeled;
    std::vector<std::size_t> test;
    /// One line per class that is missing from some part.
    std::vector<std::string> warnings;
};

/// Per-class proportional allocation with largest-remainder rounding (ties
/// go to the earlier part: labeled, unlabeled, test). Rows of each class are
/// shuffled by a generator seeded with `seed`, classes in ascending order.
SplitIndices stratified_split(std::span<const int> labels, const SplitFractions &fractions,
                              std::uint64_t seed);

} // namespace qssl::data
