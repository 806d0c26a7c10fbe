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

// Command-line front end: single runs, sweeps, dataset download.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qssl/data/dataset.hpp"
#include "qssl/data/fetch.hpp"
#include "qssl/error.hpp"
#include "qssl/runner/config.hpp"
#include "qssl/runner/experiment.hpp"
#include "qssl/runner/output.hpp"

namespace {

using namespace qssl;
using runner::ExperimentConfig;

/// Flag values as typed; only the ones given override the config file.
struct Flags {
    std::string config_file;
    std::optional<std::string> dataset;
    std::vector<std::size_t> qubits;
    std::vector<std::size_t> layers;
    std::optional<double> alpha;
    std::optional<std::size_t> prop_iters;
    std::optional<std::size_t> epochs;
    std::optional<double> lr;
    std::optional<std::uint64_t> seed;
    std::optional<double> labeled_frac;
    std::optional<double> test_frac;
    std::optional<std::string> adjacency;
    std::optional<std::size_t> knn_k;
    std::optional<double> knn_sigma;
    std::optional<std::string> op;
    std::optional<std::string> features;
    std::optional<std::string> scaling;
    std::optional<std::size_t> entropy_keep;
    std::optional<std::string> pool;
    std::optional<double> threshold;
    std::optional<std::string> gradient;
    std::optional<std::string> data_dir;
    std::optional<std::string> out;
    bool timing = false;
    std::size_t draws = 200;
};

void add_experiment_flags(CLI::App *cmd, Flags &f) {
    cmd->add_option("--config", f.config_file, "JSON config file; flags override its values")
        ->check(CLI::ExistingFile);
    cmd->add_option("--dataset", f.dataset,
                    "dataset name or CSV path; sweeps accept a comma list or 'all'");
    cmd->add_option("--qubits", f.qubits, "qubit count (comma list for sweep-qubits)")
        ->delimiter(',');
    cmd->add_option("--layers", f.layers, "entangling layers (comma list for sweep-layers)")
        ->delimiter(',');
    cmd->add_option("--alpha", f.alpha, "propagation weight in [0, 1)");
    cmd->add_option("--prop-iters", f.prop_iters, "propagation iterations T");
    cmd->add_option("--epochs", f.epochs, "training steps K");
    cmd->add_option("--lr", f.lr, "Adam learning rate");
    cmd->add_option("--seed", f.seed, "experiment seed");
    cmd->add_option("--labeled-frac", f.labeled_frac, "labeled fraction of each class");
    cmd->add_option("--test-frac", f.test_frac, "test fraction; the rest is unlabeled");
    cmd->add_option("--adjacency", f.adjacency, "random | knn");
    cmd->add_option("--knn-k", f.knn_k, "neighbours per node for knn graphs");
    cmd->add_option("--knn-sigma", f.knn_sigma, "Gaussian width for knn graphs");
    cmd->add_option("--operator", f.op, "spread | laplacian");
    cmd->add_option("--features", f.features, "auto | truncate | pad | pca");
    cmd->add_option("--scaling", f.scaling, "paper | no-leakage");
    cmd->add_option("--entropy-keep", f.entropy_keep,
                    "wires kept in the entropy bipartition (0: half the register)");
    cmd->add_option("--training-pool", f.pool, "pseudo | labeled-only");
    cmd->add_option("--pseudo-threshold", f.threshold, "score threshold for pseudo-labels");
    cmd->add_option("--gradient", f.gradient, "adjoint | param-shift");
    cmd->add_option("--data-dir", f.data_dir, "directory holding the dataset CSVs");
    cmd->add_option("--out", f.out, "output directory");
    cmd->add_flag("--record-timing", f.timing, "write wall times instead of NA");
}

ExperimentConfig build_config(const Flags &f, const std::string &command) {
    ExperimentConfig c = f.config_file.empty() ? ExperimentConfig{}
                                               : runner::load_config(f.config_file);
    const auto single = [&](const std::vector<std::size_t> &v, const char *flag) {
        if (v.size() != 1) {
            throw ValidationError(std::string(flag) + " takes one value for '" + command + "'");
        }
        return v.front();
    };
    if (f.dataset) {
        c.dataset = *f.dataset;
    }
    if (!f.qubits.empty()) {
        if (command == "sweep-qubits") {
            c.qubit_list = f.qubits;
        } else {
            c.n_qubits = single(f.qubits, "--qubits");
        }
    }
    if (!f.layers.empty()) {
        if (command == "sweep-layers") {
            c.layer_list = f.layers;
        } else {
            c.n_layers = single(f.layers, "--layers");
        }
    }
    if (f.alpha) {
        c.alpha = *f.alpha;
    }
    if (f.prop_iters) {
        c.T = *f.prop_iters;
    }
    if (f.epochs) {
        c.K = *f.epochs;
    }
    if (f.lr) {
        c.lr = *f.lr;
    }
    if (f.seed) {
        c.seed = *f.seed;
    }
    if (f.labeled_frac || f.test_frac) {
        if (f.labeled_frac) {
            c.split.labeled = *f.labeled_frac;
        }
        if (f.test_frac) {
            c.split.test = *f.test_frac;
        }
        c.split.unlabeled = 1.0 - c.split.labeled - c.split.test;
    }
    if (f.adjacency) {
        c.adjacency = runner::adjacency_mode_from_string(*f.adjacency);
    }
    if (f.knn_k) {
        c.knn_k = *f.knn_k;
    }
    if (f.knn_sigma) {
        c.knn_sigma = *f.knn_sigma;
    }
    if (f.op) {
        c.op = graphssl::operator_mode_from_string(*f.op);
    }
    if (f.features) {
        c.features = data::feature_mode_from_string(*f.features);
    }
    if (f.scaling) {
        c.scaling = runner::scaling_mode_from_string(*f.scaling);
    }
    if (f.entropy_keep) {
        c.entropy_keep = *f.entropy_keep;
    }
    if (f.pool) {
        c.training_pool = runner::training_pool_from_string(*f.pool);
    }
    if (f.threshold) {
        c.pseudo_threshold = *f.threshold;
    }
    if (f.gradient) {
        c.gradient = vqc::gradient_method_from_string(*f.gradient);
    }
    if (f.data_dir) {
        c.data_dir = *f.data_dir;
    }
    if (f.out) {
        c.out_dir = *f.out;
    }
    if (f.timing) {
        c.record_timing = true;
    }
    c.validate();
    return c;
}

void report(const std::vector<runner::RunResult> &rows) {
    for (const auto &r : rows) {
        std::fprintf(stderr,
                     "%s qubits=%zu layers=%zu seed=%llu accuracy=%.4f f1=%.4f entropy=%.4f "
                     "cost=%.4f pseudo=%zu/%zu time=%.1fs\n",
                     r.config.dataset.c_str(), r.config.n_qubits, r.config.n_layers,
                     static_cast<unsigned long long>(r.config.seed), r.metrics.accuracy,
                     r.metrics.f1, r.mean_entropy, r.final_cost, r.pseudo_positive,
                     r.pseudo_count, r.wall_time_s);
        for (const auto &w : r.warnings) {
            std::fprintf(stderr, "  warning: %s\n", w.c_str());
        }
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Graph label propagation feeding a simulated variational quantum classifier"};
    app.require_subcommand(1);
    Flags flags;

    auto *run = app.add_subcommand("run", "one experiment");
    auto *sweep_q = app.add_subcommand("sweep-qubits", "one run per qubit count and dataset");
    auto *sweep_l = app.add_subcommand("sweep-layers", "one run per layer count and dataset");
    auto *probe = app.add_subcommand(
        "probe-gradients", "variance of one gradient component over random initializations");
    for (auto *cmd : {run, sweep_q, sweep_l, probe}) {
        add_experiment_flags(cmd, flags);
    }
    probe->add_option("--draws", flags.draws, "random initializations per qubit count");

    auto *fetch = app.add_subcommand("fetch-data", "download datasets from the UCI repository");
    std::string fetch_name = "all";
    std::string fetch_dir;
    fetch->add_option("--dataset", fetch_name, "dataset name or 'all'");
    fetch->add_option("--out", fetch_dir, "target directory (default: bundled data directory)");

    auto *list = app.add_subcommand("list-datasets", "show bundled datasets");
    std::string list_dir;
    list->add_option("--data-dir", list_dir, "directory holding the dataset CSVs");

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "list-datasets") {
            const auto dir = list_dir.empty() ? data::default_data_dir()
                                              : std::filesystem::path(list_dir);
            for (auto name : data::kDatasetNames) {
                const auto &src = data::dataset_source(name);
                const auto path = dir / (std::string(name) + ".csv");
                std::cout << name << "\t" << src.rows << " rows\t" << src.features
                          << " features\t"
                          << (std::filesystem::exists(path) ? path.string() : "(missing)")
                          << '\n';
            }
            return 0;
        }
        if (command == "fetch-data") {
            const auto dir = fetch_dir.empty() ? data::default_data_dir()
                                               : std::filesystem::path(fetch_dir);
            std::vector<std::string> names;
            if (fetch_name == "all") {
                names.assign(std::begin(data::kDatasetNames), std::end(data::kDatasetNames));
            } else {
                names.push_back(fetch_name);
            }
            for (const auto &name : names) {
                try {
                    std::cout << data::fetch_dataset(name, dir).string() << '\n';
                } catch (const std::exception &e) {
                    throw runner::StageError("fetch", e.what());
                }
            }
            return 0;
        }

        ExperimentConfig config;
        try {
            config = build_config(flags, command);
        } catch (const std::exception &e) {
            throw runner::StageError("config", e.what());
        }
        if (command == "probe-gradients") {
            const auto rows = runner::gradient_variance(config, config.qubit_list, flags.draws);
            for (const auto &r : rows) {
                std::fprintf(stderr, "%s qubits=%zu variance=%.6g\n", r.dataset.c_str(),
                             r.n_qubits, r.variance);
            }
            try {
                runner::emit_gradient_variance(rows, config, config.out_dir);
            } catch (const std::exception &e) {
                throw runner::StageError("output", e.what());
            }
            return 0;
        }
        std::vector<runner::RunResult> rows;
        if (command == "run") {
            rows.push_back(runner::run_single(config));
        } else if (command == "sweep-qubits") {
            rows = runner::sweep_qubits(config, config.qubit_list);
        } else {
            rows = runner::sweep_layers(config, config.layer_list);
        }
        report(rows);
        try {
            runner::emit_outputs(rows, config, config.out_dir);
        } catch (const std::exception &e) {
            throw runner::StageError("output", e.what());
        }
        std::cout << (std::filesystem::path(config.out_dir) / "results.csv").string() << '\n';
        return 0;
    } catch (const runner::StageError &e) {
        std::cerr << "qssl: error in stage " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "qssl: error: " << e.what() << '\n';
        return 2;
    }
}
