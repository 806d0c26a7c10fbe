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
#include <filesystem>
#include <string>
#include <string_view>

namespace qssl::data {

/// Where a bundled dataset comes from upstream and the shape it must have.
struct DatasetSource {
    std::string_view name;
    std::string_view url;
    std::size_t rows;
    std::size_t features;
};

const DatasetSource &dataset_source(std::string_view name);

/// Converts the upstream file text of `name` to the fixture CSV format.
/// Throws ParseError on malformed input and ValidationError when the row or
/// column count differs from the source record.
std::string convert_upstream(std::string_view name, std::string_view text);

/// Downloads `name`, converts it and writes `<data_dir>/<name>.csv`.
/// Returns the written path.
std::filesystem::path fetch_dataset(std::string_view name, const std::filesystem::path &data_dir);

} // namespace qssl::data
