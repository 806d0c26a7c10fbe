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

#include "qssl/data/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>

#include "qssl/error.hpp"

namespace qssl::data {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

bool parse_double(std::string_view s, double &out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size() && std::isfinite(out);
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

std::size_t RawTable::missing_count() const noexcept {
    return static_cast<std::size_t>(std::count(missing.begin(), missing.end(), 1));
}

std::filesystem::path default_data_dir() {
    if (const char *env = std::getenv("QSSL_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
#ifdef QSSL_DATA_DIR
    return QSSL_DATA_DIR;
#else
    return "data";
#endif
}

bool is_known_dataset(std::string_view name) noexcept {
    return std::find(std::begin(kDatasetNames), std::end(kDatasetNames), name) !=
           std::end(kDatasetNames);
}

RawTable read_csv(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    const std::string p = path.string();
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string_view> header;
    std::string header_line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty()) {
            header_line = line;
            header = split_fields(header_line);
            break;
        }
    }
    if (header.empty()) {
        throw ParseError(p, line_no == 0 ? 1 : line_no, "missing header row");
    }
    if (header.size() < 2) {
        throw ParseError(p, line_no, "need at least one feature column and a class column");
    }
    const std::size_t d = header.size() - 1;
    RawTable t;
    t.name = path.stem().string();
    for (std::size_t c = 0; c < d; ++c) {
        t.feature_names.emplace_back(header[c]);
    }
    std::vector<double> values;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != d + 1) {
            throw ParseError(p, line_no,
                             "expected " + std::to_string(d + 1) + " fields, found " +
                                 std::to_string(fields.size()));
        }
        for (std::size_t c = 0; c < d; ++c) {
            const auto f = fields[c];
            double v = 0.0;
            if (f.empty() || f == "?") {
                values.push_back(std::numeric_limits<double>::quiet_NaN());
                t.missing.push_back(1);
            } else if (parse_double(f, v)) {
                values.push_back(v);
                t.missing.push_back(0);
            } else {
                throw ParseError(p, line_no,
                                 "column '" + t.feature_names[c] + "': not a number: '" +
                                     std::string(f) + "'");
            }
        }
        int code = 0;
        const auto cf = fields[d];
        const auto res = std::from_chars(cf.data(), cf.data() + cf.size(), code);
        if (cf.empty() || res.ec != std::errc{} || res.ptr != cf.data() + cf.size()) {
            throw ParseError(p, line_no, "class code is not an integer: '" + std::string(cf) +
                                             "'");
        }
        t.class_codes.push_back(code);
    }
    if (t.class_codes.empty()) {
        throw ParseError(p, line_no, "no data rows");
    }
    t.values = linalg::RealMatrix(t.class_codes.size(), d);
    std::copy(values.begin(), values.end(), t.values.data().begin());
    return t;
}

RawTable load_dataset(std::string_view name_or_path, const std::filesystem::path &data_dir) {
    const bool is_path = name_or_path.find('/') != std::string_view::npos ||
                         name_or_path.find('\\') != std::string_view::npos ||
                         (name_or_path.size() > 4 &&
                          name_or_path.substr(name_or_path.size() - 4) == ".csv");
    if (is_path) {
        return read_csv(std::filesystem::path(name_or_path));
    }
    if (!is_known_dataset(name_or_path)) {
        throw LookupError("unknown dataset '" + std::string(name_or_path) +
                          "' (known: iris, wine, breast_cancer, heart_disease)");
    }
    const auto path = data_dir / (std::string(name_or_path) + ".csv");
    if (!std::filesystem::exists(path)) {
        throw IoError("dataset file not found: " + path.string() +
                      " (run `qssl fetch-data` or set QSSL_DATA_DIR)");
    }
    auto t = read_csv(path);
    t.name = std::string(name_or_path);
    return t;
}

RawTable impute_median(RawTable table) {
    const std::size_t n = table.rows(), d = table.cols();
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<double> seen;
        bool any_missing = false;
        for (std::size_t r = 0; r < n; ++r) {
            if (table.is_missing(r, c)) {
                any_missing = true;
            } else {
                seen.push_back(table.values(r, c));
            }
        }
        if (seen.empty()) {
            throw ValidationError("column '" + table.feature_names[c] +
                                  "' has no observed values to impute from");
        }
        if (!any_missing) {
            continue;
        }
        const double med = median_of(std::move(seen));
        for (std::size_t r = 0; r < n; ++r) {
            if (table.is_missing(r, c)) {
                table.values(r, c) = med;
                table.missing[r * d + c] = 0;
            }
        }
    }
    return table;
}

std::vector<int> binarize_labels(std::span<const int> codes) {
    std::vector<int> out(codes.size());
    if (codes.empty()) {
        return out;
    }
    const int lo = *std::min_element(codes.begin(), codes.end());
    std::transform(codes.begin(), codes.end(), out.begin(),
                   [lo](int c) { return c - lo > 0 ? 1 : 0; });
    return out;
}

Dataset to_dataset(RawTable table) {
    auto clean = impute_median(std::move(table));
    Dataset ds;
    ds.name = clean.name;
    ds.labels = binarize_labels(clean.class_codes);
    ds.features = std::move(clean.values);
    ds.feature_names = std::move(clean.feature_names);
    return ds;
}

} // namespace qssl::data
