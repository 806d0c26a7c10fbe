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

#include "qssl/runner/experiment.hpp"

#include <chrono>
#include <numeric>
#include <utility>

#include "qssl/data/dataset.hpp"
#include "qssl/data/preprocess.hpp"
#include "qssl/data/split.hpp"
#include "qssl/graphssl/graph.hpp"
#include "qssl/graphssl/propagation.hpp"
#include "qssl/qsim/entropy.hpp"
#include "qssl/rng.hpp"
#include "qssl/vqc/circuit.hpp"
#include "qssl/vqc/cost.hpp"
#include "qssl/vqc/embedding.hpp"
#include "qssl/vqc/train.hpp"

namespace qssl::runner {
namespace {

template <typename F> auto stage(const char *name, F &&body) {
    try {
        return body();
    } catch (const StageError &) {
        throw;
    } catch (const std::exception &e) {
        throw StageError(name, e.what());
    }
}

linalg::RealMatrix take_rows(const linalg::RealMatrix &x, std::span<const std::size_t> rows) {
    linalg::RealMatrix out(rows.size(), x.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto src = x.row(rows[i]);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

std::vector<int> take(std::span<const int> v, std::span<const std::size_t> rows) {
    std::vector<int> out;
    out.reserve(rows.size());
    for (auto r : rows) {
        out.push_back(v[r]);
    }
    return out;
}

std::string single_dataset(const ExperimentConfig &config) {
    const auto names = config.dataset_list();
    if (names.size() != 1) {
        throw StageError("config", "a single run needs exactly one dataset, got '" +
                                       config.dataset + "'");
    }
    return names.front();
}

template <typename Set>
std::vector<RunResult> sweep(const ExperimentConfig &config, const std::vector<std::size_t> &values,
                             Set set) {
    if (values.empty()) {
        throw StageError("config", "sweep list is empty");
    }
    std::vector<RunResult> rows;
    for (const auto &name : config.dataset_list()) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            ExperimentConfig c = config;
            c.dataset = name;
            c.seed = config.seed + i;
            set(c, values[i]);
            rows.push_back(run_single(c));
        }
    }
    return rows;
}

} // namespace

PreparedExperiment prepare_experiment(const ExperimentConfig &config) {
    stage("config", [&] {
        config.validate();
        return 0;
    });
    const std::string name = single_dataset(config);
    const std::size_t n = config.n_qubits;
    PreparedExperiment out;

    const auto ds = stage("load", [&] {
        return data::to_dataset(data::load_dataset(name, config.resolved_data_dir()));
    });

    auto split = stage("split", [&] {
        return data::stratified_split(ds.labels, config.split,
                                      derive_seed(config.seed, SeedStream::split));
    });
    out.warnings = split.warnings;

    // Graph nodes: labeled rows first, then unlabeled rows.
    std::vector<std::size_t> pool = split.labeled;
    pool.insert(pool.end(), split.unlabeled.begin(), split.unlabeled.end());
    const std::size_t n_labeled = split.labeled.size();

    const auto [standardized, reduced] = stage("preprocess", [&] {
        std::vector<std::size_t> fit_rows;
        if (config.scaling == ScalingMode::paper) {
            fit_rows.resize(ds.features.rows());
            std::iota(fit_rows.begin(), fit_rows.end(), std::size_t{0});
        } else {
            fit_rows = pool;
            std::sort(fit_rows.begin(), fit_rows.end());
        }
        auto z = data::standardize(ds.features, fit_rows).x;
        auto r = data::reduce_features(z, n, config.features);
        return std::pair{std::move(z), std::move(r)};
    });

    const auto graph = stage("graph", [&] {
        if (config.adjacency == AdjacencyMode::random) {
            return graphssl::build_random_adjacency(
                pool.size(), derive_seed(config.seed, SeedStream::graph), config.op);
        }
        return graphssl::build_knn_adjacency(take_rows(standardized, pool), config.knn_k,
                                             config.knn_sigma, config.op);
    });

    const auto pseudo = stage("propagate", [&] {
        std::vector<std::size_t> labeled_nodes(n_labeled);
        std::iota(labeled_nodes.begin(), labeled_nodes.end(), std::size_t{0});
        const auto y_l = take(ds.labels, split.labeled);
        const auto y0 = graphssl::initial_labels(pool.size(), labeled_nodes, y_l);
        const auto f = graphssl::propagate_labels(graph.op, y0, config.alpha, config.T);
        std::vector<std::size_t> unlabeled_nodes(pool.size() - n_labeled);
        std::iota(unlabeled_nodes.begin(), unlabeled_nodes.end(), n_labeled);
        return graphssl::pseudo_labels(f, unlabeled_nodes, config.pseudo_threshold);
    });
    out.pseudo_count = pseudo.size();
    out.pseudo_positive = static_cast<std::size_t>(std::count(pseudo.begin(), pseudo.end(), 1));

    stage("circuit", [&] {
        out.circuit.n_qubits = n;
        out.circuit.n_layers = config.n_layers;
        out.circuit.embed_unitary = vqc::embed_adjacency_unitary(
            graph.adjacency, n, derive_seed(config.seed, SeedStream::pad));
        out.circuit.validate();

        std::vector<std::size_t> train_rows = split.labeled;
        out.train_labels = take(ds.labels, split.labeled);
        if (config.training_pool == TrainingPool::pseudo) {
            train_rows.insert(train_rows.end(), split.unlabeled.begin(), split.unlabeled.end());
            out.train_labels.insert(out.train_labels.end(), pseudo.begin(), pseudo.end());
        }
        out.train_states = vqc::prepare_states(take_rows(reduced, train_rows), out.circuit);
        out.test_states = vqc::prepare_states(take_rows(reduced, split.test), out.circuit);
        out.test_labels = take(ds.labels, split.test);
        return 0;
    });
    return out;
}

RunResult run_single(const ExperimentConfig &config) {
    const auto start = std::chrono::steady_clock::now();
    RunResult result;
    result.config = config;
    result.config.dataset = single_dataset(config);

    const auto prepared = prepare_experiment(config);
    result.pseudo_positive = prepared.pseudo_positive;
    result.pseudo_count = prepared.pseudo_count;
    result.warnings = prepared.warnings;
    const std::size_t wire = prepared.circuit.measure_wire;

    const auto params = stage("train", [&] {
        vqc::TrainHyper hyper;
        hyper.lr = config.lr;
        hyper.epochs = config.K;
        hyper.seed = derive_seed(config.seed, SeedStream::params);
        hyper.gradient = config.gradient;
        auto [p, record] =
            vqc::train_prepared(prepared.train_states, prepared.train_labels, prepared.circuit,
                                hyper);
        result.cost_history = std::move(record.costs);
        const auto logits = vqc::logits_prepared(prepared.train_states, p, wire);
        result.final_cost = vqc::bce_from_logits(logits, prepared.train_labels);
        return p;
    });

    const auto predictions = stage("predict", [&] {
        const std::size_t n = config.n_qubits;
        const auto keep = qsim::leading_wires(std::min(config.partition_size(), n));
        std::vector<int> pred;
        pred.reserve(prepared.test_states.size());
        result.entropies.reserve(prepared.test_states.size());
        for (const auto &s : prepared.test_states) {
            qsim::StateVector state = s;
            vqc::apply_ansatz(state, params);
            pred.push_back(vqc::predict(state.expectation_z(wire)));
            // A single qubit has no bipartition; its entropy is reported as 0.
            result.entropies.push_back(n == 1 ? 0.0 : qsim::entanglement_entropy(state, keep));
        }
        double sum = 0.0;
        for (double e : result.entropies) {
            sum += e;
        }
        result.mean_entropy = sum / static_cast<double>(result.entropies.size());
        return pred;
    });

    result.metrics = stage("metrics", [&] {
        return eval::metrics_from_confusion(eval::confusion(prepared.test_labels, predictions));
    });
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<RunResult> sweep_qubits(const ExperimentConfig &config,
                                    const std::vector<std::size_t> &qubit_list) {
    return sweep(config, qubit_list, [](ExperimentConfig &c, std::size_t q) { c.n_qubits = q; });
}

std::vector<RunResult> sweep_layers(const ExperimentConfig &config,
                                    const std::vector<std::size_t> &layer_list) {
    return sweep(config, layer_list, [](ExperimentConfig &c, std::size_t l) { c.n_layers = l; });
}

std::vector<GradientVariance> gradient_variance(const ExperimentConfig &config,
                                                const std::vector<std::size_t> &qubit_list,
                                                std::size_t draws) {
    if (draws < 2) {
        throw StageError("config", "gradient variance needs at least two draws");
    }
    std::vector<GradientVariance> rows;
    for (const auto &name : config.dataset_list()) {
        for (auto q : qubit_list) {
            ExperimentConfig c = config;
            c.dataset = name;
            c.n_qubits = q;
            const auto prepared = prepare_experiment(c);
            std::vector<double> g(draws);
            stage("probe", [&] {
                for (std::size_t d = 0; d < draws; ++d) {
                    Rng rng(derive_seed(config.seed + d, SeedStream::probe));
                    const auto params = vqc::AnsatzParams::random(c.n_layers, q, rng);
                    g[d] = vqc::cost_and_grad(prepared.train_states, prepared.train_labels,
                                              params, prepared.circuit.measure_wire,
                                              c.gradient)
                               .grad.flat()[0];
                }
                return 0;
            });
            double mean = 0.0;
            for (double v : g) {
                mean += v;
            }
            mean /= static_cast<double>(draws);
            double var = 0.0;
            for (double v : g) {
                var += (v - mean) * (v - mean);
            }
            var /= static_cast<double>(draws - 1);
            rows.push_back({name, q, draws, mean, var});
        }
    }
    return rows;
}

} // namespace qssl::runner
