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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qssl/linalg/matrix.hpp"

namespace qssl::data {

/// Bundled benchmark names, in the order they are listed and swept.
inline constexpr std::string_view kDatasetNames[] = {"iris", "wine", "breast_cancer",
                                                     "heart_disease"};

/// Parsed CSV before preprocessing. Missing cells hold NaN and are flagged in
/// `missing` (row-major, one flag per feature cell).
struct RawTable {
    std::string name;
    std::vector<std::string> feature_names;
    linalg::RealMatrix values;
    std::vector<std::uint8_t> missing;
    std::vector<int> class_codes;

    [[nodiscard]] std::size_t rows() const noexcept { return values.rows(); }
    [[nodiscard]] std::size_t cols() const noexcept { return values.cols(); }
    [[nodiscard]] bool is_missing(std::size_t r, std::size_t c) const {
        return missing[r * cols() + c] != 0;
    }
    [[nodiscard]] std::size_t missing_count() const noexcept;
};

/// Preprocessed dataset: complete feature matrix and binary labels.
struct Dataset {
    std::string name;
    linalg::RealMatrix features;
    std::vector<int> labels;
    std::vector<std::string> feature_names;
};

/// QSSL_DATA_DIR from the environment if set, otherwise the directory the
/// fixtures were installed to at build time.
std::filesystem::path default_data_dir();

[[nodiscard]] bool is_known_dataset(std::string_view name) noexcept;

/// Reads a fixture CSV: header row, numeric feature columns, integer class
/// code last. Empty cells and "?" are missing.
RawTable read_csv(const std::filesystem::path &path);

/// Loads a bundled dataset by name from `data_dir`, or any CSV in the same
/// format when `name_or_path` names a file (contains a path separator or
/// ends in ".csv"). Throws LookupError for unknown names.
RawTable load_dataset(std::string_view name_or_path,
                      const std::filesystem::path &data_dir = default_data_dir());

/// Replaces each missing cell by the median of the observed values in its
/// column. Throws ValidationError naming a column with no observed values.
RawTable impute_median(RawTable table);

/// Shifts codes so the smallest is 0, then maps code > 0 to 1.
std::vector<int> binarize_labels(std::span<const int> codes);

/// impute_median followed by binarize_labels.
Dataset to_dataset(RawTable table);

} // namespace qssl::data
