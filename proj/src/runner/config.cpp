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

#include "qssl/runner/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qssl/data/dataset.hpp"
#include "qssl/error.hpp"
#include "qssl/qsim/entropy.hpp"
#include "qssl/qsim/state_vector.hpp"

namespace qssl::runner {
namespace {

using json = nlohmann::ordered_json;

template <typename Enum, std::size_t N>
Enum enum_from_string(std::string_view name, const Enum (&values)[N], const char *what) {
    std::string expected;
    for (auto v : values) {
        if (name == to_string(v)) {
            return v;
        }
        expected += (expected.empty() ? "" : ", ") + std::string(to_string(v));
    }
    throw LookupError("unknown " + std::string(what) + " '" + std::string(name) +
                      "' (expected " + expected + ")");
}

void require(bool ok, const std::string &msg) {
    if (!ok) {
        throw ValidationError(msg);
    }
}

template <typename T> void read(const json &j, const char *key, T &out) {
    const auto it = j.find(key);
    if (it == j.end()) {
        return;
    }
    try {
        if constexpr (std::is_same_v<T, std::size_t> || std::is_same_v<T, std::uint64_t>) {
            require(it->is_number_unsigned(),
                    std::string("'") + key + "' must be a nonnegative integer");
        } else if constexpr (std::is_same_v<T, double>) {
            require(it->is_number(), std::string("'") + key + "' must be a number");
        }
        out = it->template get<T>();
    } catch (const json::exception &e) {
        throw ValidationError(std::string("'") + key + "': " + e.what());
    }
}

template <typename Enum, typename Parse>
void read_enum(const json &j, const char *key, Enum &out, Parse parse) {
    std::string s;
    read(j, key, s);
    if (j.contains(key)) {
        out = parse(s);
    }
}

} // namespace

std::string_view to_string(AdjacencyMode mode) noexcept {
    return mode == AdjacencyMode::random ? "random" : "knn";
}

std::string_view to_string(ScalingMode mode) noexcept {
    return mode == ScalingMode::paper ? "paper" : "no-leakage";
}

std::string_view to_string(TrainingPool pool) noexcept {
    return pool == TrainingPool::pseudo ? "pseudo" : "labeled-only";
}

AdjacencyMode adjacency_mode_from_string(std::string_view name) {
    static constexpr AdjacencyMode all[] = {AdjacencyMode::random, AdjacencyMode::knn};
    return enum_from_string(name, all, "adjacency mode");
}

ScalingMode scaling_mode_from_string(std::string_view name) {
    static constexpr ScalingMode all[] = {ScalingMode::paper, ScalingMode::no_leakage};
    return enum_from_string(name, all, "scaling mode");
}

TrainingPool training_pool_from_string(std::string_view name) {
    static constexpr TrainingPool all[] = {TrainingPool::pseudo, TrainingPool::labeled_only};
    return enum_from_string(name, all, "training pool");
}

void ExperimentConfig::validate() const {
    require(!dataset.empty(), "dataset is empty");
    require(n_qubits >= 1 && n_qubits <= qsim::kMaxQubits,
            "n_qubits must be in [1, " + std::to_string(qsim::kMaxQubits) + "]");
    require(n_layers >= 1, "n_layers must be at least 1");
    require(alpha >= 0.0 && alpha < 1.0, "alpha must be in [0, 1)");
    require(std::isfinite(lr) && lr > 0.0, "lr must be positive");
    require(split.labeled > 0.0 && split.unlabeled > 0.0 && split.test > 0.0 &&
                std::abs(split.labeled + split.unlabeled + split.test - 1.0) <= 1e-9,
            "split fractions must be positive and sum to 1");
    require(knn_k >= 1, "knn_k must be at least 1");
    require(std::isfinite(knn_sigma) && knn_sigma > 0.0, "knn_sigma must be positive");
    require(n_qubits == 1 || entropy_keep < n_qubits,
            "entropy_keep must be below n_qubits");
    require(std::isfinite(pseudo_threshold), "pseudo_threshold must be finite");
    for (auto q : qubit_list) {
        require(q >= 1 && q <= qsim::kMaxQubits, "qubit_list entry out of range");
    }
    for (auto l : layer_list) {
        require(l >= 1, "layer_list entries must be at least 1");
    }
}

std::size_t ExperimentConfig::partition_size() const noexcept {
    return entropy_keep == 0 ? qsim::default_partition(n_qubits) : entropy_keep;
}

std::filesystem::path ExperimentConfig::resolved_data_dir() const {
    return data_dir.empty() ? data::default_data_dir() : std::filesystem::path(data_dir);
}

std::vector<std::string> ExperimentConfig::dataset_list() const {
    if (dataset == "all") {
        return {std::begin(data::kDatasetNames), std::end(data::kDatasetNames)};
    }
    std::vector<std::string> out;
    std::stringstream ss(dataset);
    for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    if (out.empty()) {
        throw ValidationError("dataset is empty");
    }
    return out;
}

std::string to_json(const ExperimentConfig &c) {
    json j;
    j["dataset"] = c.dataset;
    j["n_qubits"] = c.n_qubits;
    j["n_layers"] = c.n_layers;
    j["alpha"] = c.alpha;
    j["T"] = c.T;
    j["K"] = c.K;
    j["lr"] = c.lr;
    j["seed"] = c.seed;
    j["split"] = {{"labeled", c.split.labeled},
                  {"unlabeled", c.split.unlabeled},
                  {"test", c.split.test}};
    j["adjacency"] = to_string(c.adjacency);
    j["knn_k"] = c.knn_k;
    j["knn_sigma"] = c.knn_sigma;
    j["operator"] = graphssl::to_string(c.op);
    j["features"] = data::to_string(c.features);
    j["scaling"] = to_string(c.scaling);
    j["entropy_keep"] = c.entropy_keep;
    j["training_pool"] = to_string(c.training_pool);
    j["pseudo_threshold"] = c.pseudo_threshold;
    j["gradient"] = vqc::to_string(c.gradient);
    j["qubit_list"] = c.qubit_list;
    j["layer_list"] = c.layer_list;
    j["record_timing"] = c.record_timing;
    j["data_dir"] = c.data_dir;
    j["out_dir"] = c.out_dir;
    return j.dump(2) + "\n";
}

ExperimentConfig config_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ValidationError("config top level must be an object");
    }
    static const std::set<std::string> known = {
        "dataset",   "n_qubits",      "n_layers",         "alpha",    "T",
        "K",         "lr",            "seed",             "split",    "adjacency",
        "knn_k",     "knn_sigma",     "operator",         "features", "scaling",
        "entropy_keep", "training_pool", "pseudo_threshold", "gradient", "qubit_list",
        "layer_list", "record_timing", "data_dir",        "out_dir",  "rng"};
    for (const auto &item : j.items()) {
        if (!known.contains(item.key())) {
            throw LookupError("unknown config key '" + item.key() + "'");
        }
    }

    ExperimentConfig c;
    read(j, "dataset", c.dataset);
    read(j, "n_qubits", c.n_qubits);
    read(j, "n_layers", c.n_layers);
    read(j, "alpha", c.alpha);
    read(j, "T", c.T);
    read(j, "K", c.K);
    read(j, "lr", c.lr);
    read(j, "seed", c.seed);
    if (const auto it = j.find("split"); it != j.end()) {
        require(it->is_object(), "'split' must be an object");
        for (const auto &item : it->items()) {
            require(item.key() == "labeled" || item.key() == "unlabeled" || item.key() == "test",
                    "unknown split part '" + item.key() + "'");
        }
        read(*it, "labeled", c.split.labeled);
        read(*it, "unlabeled", c.split.unlabeled);
        read(*it, "test", c.split.test);
    }
    read_enum(j, "adjacency", c.adjacency, adjacency_mode_from_string);
    read(j, "knn_k", c.knn_k);
    read(j, "knn_sigma", c.knn_sigma);
    read_enum(j, "operator", c.op, graphssl::operator_mode_from_string);
    read_enum(j, "features", c.features, data::feature_mode_from_string);
    read_enum(j, "scaling", c.scaling, scaling_mode_from_string);
    read(j, "entropy_keep", c.entropy_keep);
    read_enum(j, "training_pool", c.training_pool, training_pool_from_string);
    read(j, "pseudo_threshold", c.pseudo_threshold);
    read_enum(j, "gradient", c.gradient, vqc::gradient_method_from_string);
    read(j, "qubit_list", c.qubit_list);
    read(j, "layer_list", c.layer_list);
    read(j, "record_timing", c.record_timing);
    read(j, "data_dir", c.data_dir);
    read(j, "out_dir", c.out_dir);
    return c;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

} // namespace qssl::runner
