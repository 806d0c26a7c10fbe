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

#include "qssl/data/fetch.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "qssl/error.hpp"

namespace qssl::data {
namespace {

constexpr std::array<DatasetSource, 4> kSources{{
    {"iris", "https://archive.ics.uci.edu/ml/machine-learning-databases/iris/iris.data", 150,
     4},
    {"wine", "https://archive.ics.uci.edu/ml/machine-learning-databases/wine/wine.data", 178,
     13},
    {"breast_cancer",
     "https://archive.ics.uci.edu/ml/machine-learning-databases/breast-cancer-wisconsin/"
     "wdbc.data",
     569, 30},
    {"heart_disease",
     "https://archive.ics.uci.edu/ml/machine-learning-databases/heart-disease/"
     "processed.cleveland.data",
     303, 13},
}};

constexpr std::string_view kIrisHeader =
    "sepal_length,sepal_width,petal_length,petal_width";
constexpr std::string_view kWineHeader =
    "alcohol,malic_acid,ash,alcalinity_of_ash,magnesium,total_phenols,flavanoids,"
    "nonflavanoid_phenols,proanthocyanins,color_intensity,hue,od280_od315_of_diluted_wines,"
    "proline";
constexpr std::string_view kCancerHeader =
    "mean_radius,mean_texture,mean_perimeter,mean_area,mean_smoothness,mean_compactness,"
    "mean_concavity,mean_concave_points,mean_symmetry,mean_fractal_dimension,radius_error,"
    "texture_error,perimeter_error,area_error,smoothness_error,compactness_error,"
    "concavity_error,concave_points_error,symmetry_error,fractal_dimension_error,"
    "worst_radius,worst_texture,worst_perimeter,worst_area,worst_smoothness,"
    "worst_compactness,worst_concavity,worst_concave_points,worst_symmetry,"
    "worst_fractal_dimension";
constexpr std::string_view kHeartHeader =
    "age,sex,cp,trestbps,chol,fbs,restecg,thalach,exang,oldpeak,slope,ca,thal";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> fields_of(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            return out;
        }
        start = comma + 1;
    }
}

void check_numeric(std::string_view f, std::string_view source, std::size_t line) {
    if (f == "?" || f.empty()) {
        return;
    }
    double v = 0.0;
    const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
    if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
        throw ParseError(std::string(source), line, "not a number: '" + std::string(f) + "'");
    }
}

} // namespace

const DatasetSource &dataset_source(std::string_view name) {
    for (const auto &s : kSources) {
        if (s.name == name) {
            return s;
        }
    }
    throw LookupError("unknown dataset '" + std::string(name) + "'");
}

std::string convert_upstream(std::string_view name, std::string_view text) {
    const auto &src = dataset_source(name);
    std::ostringstream out;
    std::string_view header;
    if (name == "iris") {
        header = kIrisHeader;
    } else if (name == "wine") {
        header = kWineHeader;
    } else if (name == "breast_cancer") {
        header = kCancerHeader;
    } else {
        header = kHeartHeader;
    }
    out << header << ",class\n";
    std::size_t rows = 0, line_no = 0, pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const auto line = trim(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto f = fields_of(line);
        std::vector<std::string_view> feats;
        std::string code;
        if (name == "iris") {
            if (f.size() != 5) {
                throw ParseError(std::string(src.url), line_no, "expected 5 fields");
            }
            feats.assign(f.begin(), f.begin() + 4);
            if (f[4] == "Iris-setosa") {
                code = "0";
            } else if (f[4] == "Iris-versicolor") {
                code = "1";
            } else if (f[4] == "Iris-virginica") {
                code = "2";
            } else {
                throw ParseError(std::string(src.url), line_no,
                                 "unknown species '" + std::string(f[4]) + "'");
            }
        } else if (name == "wine") {
            if (f.size() != 14) {
                throw ParseError(std::string(src.url), line_no, "expected 14 fields");
            }
            feats.assign(f.begin() + 1, f.end());
            int c = 0;
            const auto res = std::from_chars(f[0].data(), f[0].data() + f[0].size(), c);
            if (res.ec != std::errc{} || c < 1) {
                throw ParseError(std::string(src.url), line_no, "bad cultivar code");
            }
            code = std::to_string(c - 1);
        } else if (name == "breast_cancer") {
            if (f.size() != 32) {
                throw ParseError(std::string(src.url), line_no, "expected 32 fields");
            }
            feats.assign(f.begin() + 2, f.end());
            if (f[1] == "M") {
                code = "0";
            } else if (f[1] == "B") {
                code = "1";
            } else {
                throw ParseError(std::string(src.url), line_no,
                                 "unknown diagnosis '" + std::string(f[1]) + "'");
            }
        } else {
            if (f.size() != 14) {
                throw ParseError(std::string(src.url), line_no, "expected 14 fields");
            }
            feats.assign(f.begin(), f.begin() + 13);
            double c = 0.0;
            const auto res = std::from_chars(f[13].data(), f[13].data() + f[13].size(), c);
            if (res.ec != std::errc{} || c < 0 || c != static_cast<int>(c)) {
                throw ParseError(std::string(src.url), line_no, "bad diagnosis code");
            }
            code = std::to_string(static_cast<int>(c));
        }
        for (const auto v : feats) {
            check_numeric(v, src.url, line_no);
            out << v << ',';
        }
        out << code << '\n';
        ++rows;
    }
    if (rows != src.rows) {
        throw ValidationError(std::string(name) + ": expected " + std::to_string(src.rows) +
                              " rows, got " + std::to_string(rows));
    }
    return out.str();
}

std::filesystem::path fetch_dataset(std::string_view name,
                                    const std::filesystem::path &data_dir) {
    const auto &src = dataset_source(name);
    const std::string url(src.url);
    const auto scheme_end = url.find("://");
    const auto path_start = url.find('/', scheme_end + 3);
    httplib::Client client(url.substr(0, path_start));
    client.set_follow_location(true);
    client.set_connection_timeout(30);
    client.set_read_timeout(60);
    const auto res = client.Get(url.substr(path_start));
    if (!res) {
        throw IoError("download failed for " + url + ": " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw IoError("download failed for " + url + ": HTTP " + std::to_string(res->status));
    }
    const std::string csv = convert_upstream(name, res->body);
    std::filesystem::create_directories(data_dir);
    const auto target = data_dir / (std::string(name) + ".csv");
    const auto tmp = data_dir / (std::string(name) + ".csv.part");
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            throw IoError("cannot write " + tmp.string());
        }
        out << csv;
        if (!out) {
            throw IoError("write failed: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
    return target;
}

} // namespace qssl::data
