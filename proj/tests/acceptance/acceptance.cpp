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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Pass a list of criterion numbers to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "qssl/data/dataset.hpp"
#include "qssl/eval/metrics.hpp"
#include "qssl/graphssl/graph.hpp"
#include "qssl/graphssl/propagation.hpp"
#include "qssl/linalg/eigen.hpp"
#include "qssl/qsim/entropy.hpp"
#include "qssl/runner/experiment.hpp"
#include "qssl/vqc/circuit.hpp"
#include "support/oracles.hpp"

using namespace qssl;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

qsim::StateVector to_state(std::size_t n, const std::vector<oracle::cplx> &v) {
    return qsim::StateVector(n, v);
}

// ---------------------------------------------------------------------------

constexpr double kPropTol = 1e-8;
constexpr double kPropSeconds = 10.0;

Outcome propagation_oracle() {
    const auto start = Clock::now();
    double worst = 0.0;
    for (std::uint64_t g = 0; g < 20; ++g) {
        const std::size_t nodes = 10 + (90 * g) / 19; // 10 .. 100
        const auto graph = graphssl::build_random_adjacency(nodes, 1000 + g);
        std::mt19937_64 gen(g);
        std::vector<std::size_t> labeled;
        std::vector<int> labels;
        for (std::size_t i = 0; i < nodes; ++i) {
            if (gen() % 3 == 0) {
                labeled.push_back(i);
                labels.push_back(static_cast<int>(gen() & 1U));
            }
        }
        const auto y = graphssl::initial_labels(nodes, labeled, labels);
        const auto it = graphssl::propagate_labels(graph.op, y, 0.9, 1000);
        const auto cf = graphssl::closed_form_labels(graph.op, y, 0.9);
        double fro = 0.0;
        for (std::size_t i = 0; i < nodes; ++i) {
            fro += (it[i] - cf[i]) * (it[i] - cf[i]);
        }
        worst = std::max(worst, std::sqrt(fro));
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {worst <= kPropTol && secs < kPropSeconds,
            "max Frobenius gap " + fmt("%.2e", worst) + " over 20 graphs, " +
                fmt("%.2f", secs) + " s"};
}

// ---------------------------------------------------------------------------

constexpr double kFdStep = 1e-5;
constexpr double kGradTol = 1e-5;
constexpr double kGradSeconds = 30.0;

Outcome gradient_oracle() {
    const auto start = Clock::now();
    const std::size_t n = 4, layers = 2;
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    // Small training set pushed through a random orthogonal embedding.
    linalg::RealMatrix a(16, 16);
    for (double &v : a.data()) {
        v = angle(gen);
    }
    vqc::CircuitConfig cfg;
    cfg.n_qubits = n;
    cfg.n_layers = layers;
    cfg.embed_unitary = vqc::EmbedUnitary(linalg::householder_qr(a));
    linalg::RealMatrix x(6, n);
    for (double &v : x.data()) {
        v = angle(gen);
    }
    const std::vector<int> y{0, 1, 1, 0, 1, 0};

    double worst = 0.0;
    for (int draw = 0; draw < 10; ++draw) {
        Rng rng(static_cast<std::uint64_t>(draw));
        auto params = vqc::AnsatzParams::random(layers, n, rng);
        const auto grad = vqc::param_shift_grad(params, x, y, cfg);
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double orig = params.flat()[i];
            params.flat()[i] = orig + kFdStep;
            const double up = vqc::bce_cost(params, x, y, cfg);
            params.flat()[i] = orig - kFdStep;
            const double down = vqc::bce_cost(params, x, y, cfg);
            params.flat()[i] = orig;
            worst = std::max(worst, std::abs(grad.flat()[i] - (up - down) / (2.0 * kFdStep)));
        }
        // The bare expectation as well, from one prepared state.
        const auto state = vqc::prepare_state(x.row(0), cfg);
        std::vector<double> g(params.size());
        vqc::expectation_grad_param_shift(state, params, 0, g);
        for (std::size_t i = 0; i < params.size(); ++i) {
            const double orig = params.flat()[i];
            params.flat()[i] = orig + kFdStep;
            const double up = vqc::forward_prepared(state, params, 0);
            params.flat()[i] = orig - kFdStep;
            const double down = vqc::forward_prepared(state, params, 0);
            params.flat()[i] = orig;
            worst = std::max(worst, std::abs(g[i] - (up - down) / (2.0 * kFdStep)));
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {worst <= kGradTol && secs < kGradSeconds,
            "max |shift - central difference| " + fmt("%.2e", worst) + ", " +
                fmt("%.2f", secs) + " s"};
}

// ---------------------------------------------------------------------------

constexpr double kEntropyTol = 1e-9;

Outcome entropy_invariants() {
    const double r = 1.0 / std::sqrt(2.0);
    const auto bell = to_state(2, {r, 0, 0, r});
    const std::size_t first[] = {0};
    const double s_bell = qsim::entanglement_entropy(bell, first);

    std::vector<oracle::cplx> ghz(16);
    ghz[0] = ghz[15] = r;
    const std::size_t pair[] = {0, 1};
    const double s_ghz = qsim::entanglement_entropy(to_state(4, ghz), pair);

    std::mt19937_64 gen(3);
    double product_max = 0.0, asym_max = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + t % 3;
        std::vector<oracle::cplx> prod{1.0};
        for (std::size_t w = 0; w < n; ++w) {
            const auto q = oracle::random_state(1, gen);
            std::vector<oracle::cplx> next;
            for (auto a : prod) {
                next.push_back(a * q[0]);
                next.push_back(a * q[1]);
            }
            prod = std::move(next);
        }
        const auto psi = oracle::random_state(n, gen);
        const auto p_state = to_state(n, prod);
        const auto r_state = to_state(n, psi);
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
            std::vector<std::size_t> keep, rest;
            for (std::size_t w = 0; w < n; ++w) {
                ((mask >> w) & 1U ? keep : rest).push_back(w);
            }
            product_max = std::max(product_max, qsim::entanglement_entropy(p_state, keep));
            asym_max = std::max(asym_max, std::abs(qsim::entanglement_entropy(r_state, keep) -
                                                   qsim::entanglement_entropy(r_state, rest)));
        }
    }
    const bool pass = std::abs(s_bell - 1.0) <= kEntropyTol &&
                      std::abs(s_ghz - 1.0) <= kEntropyTol && product_max <= kEntropyTol &&
                      asym_max <= kEntropyTol;
    return {pass, "Bell " + fmt("%.12f", s_bell) + ", GHZ " + fmt("%.12f", s_ghz) +
                      ", product max " + fmt("%.1e", product_max) + ", |S(A)-S(B)| max " +
                      fmt("%.1e", asym_max)};
}

// ---------------------------------------------------------------------------

constexpr double kTraceTol = 1e-10;

Outcome partial_trace_oracle() {
    std::mt19937_64 gen(4);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + t % 3;
        const auto psi = oracle::random_state(n, gen);
        const auto state = to_state(n, psi);
        std::vector<std::size_t> wires(n);
        std::iota(wires.begin(), wires.end(), std::size_t{0});
        std::shuffle(wires.begin(), wires.end(), gen);
        const std::size_t k = 1 + gen() % (n - 1);
        const std::vector<std::size_t> keep(wires.begin(), wires.begin() + static_cast<long>(k));
        const auto got = qsim::reduced_density(state, keep);
        const auto want = oracle::partial_trace(psi, n, keep);
        for (std::size_t i = 0; i < want.size(); ++i) {
            for (std::size_t j = 0; j < want.size(); ++j) {
                worst = std::max(worst, std::abs(got(i, j) - want[i][j]));
            }
        }
    }
    return {worst <= kTraceTol, "max elementwise gap " + fmt("%.2e", worst) + " on 100 states"};
}

// ---------------------------------------------------------------------------

constexpr double kUnitaryTol = 1e-10;

Outcome unitarity_and_determinism() {
    double worst = 0.0;
    bool identical = true;
    for (auto name : data::kDatasetNames) {
        for (std::size_t n : {4U, 8U}) {
            runner::ExperimentConfig c;
            c.dataset = std::string(name);
            c.n_qubits = n;
            c.seed = 17;
            const auto u1 = runner::prepare_experiment(c).circuit.embed_unitary.dense(0);
            const auto u2 = runner::prepare_experiment(c).circuit.embed_unitary.dense(0);
            identical = identical && u1 == u2;
            worst = std::max(worst, linalg::unitarity_defect(u1));
        }
    }
    return {worst <= kUnitaryTol && identical,
            "max |U^H U - I| " + fmt("%.2e", worst) +
                (identical ? ", bit-identical rebuilds" : ", rebuilds differ")};
}

// ---------------------------------------------------------------------------

constexpr double kF1Tol = 1e-3;

Outcome metrics_oracle() {
    std::mt19937_64 gen(6);
    std::size_t mismatches = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + gen() % 500;
        std::vector<int> a(n), b(n);
        std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = static_cast<int>(gen() & 1U);
            b[i] = static_cast<int>(gen() & 1U);
            if (a[i] == 1) {
                (b[i] == 1 ? tp : fn)++;
            } else {
                (b[i] == 1 ? fp : tn)++;
            }
        }
        const auto m = eval::metrics_from_confusion(eval::confusion(a, b));
        const double acc = static_cast<double>(tp + tn) / static_cast<double>(n);
        const double prec = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
        const double rec = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
        const double f1 = prec + rec == 0.0 ? 0.0 : 2.0 * prec * rec / (prec + rec);
        if (!(m.counts == eval::Confusion{tp, fp, fn, tn}) || m.accuracy != acc ||
            m.precision != prec || m.recall != rec || m.f1 != f1) {
            ++mismatches;
        }
    }
    const double f1 = eval::f1_score(0.666, 0.938);
    return {mismatches == 0 && std::abs(f1 - 0.779) <= kF1Tol,
            std::to_string(mismatches) + " mismatches in 1000 draws; f1(0.666, 0.938) = " +
                fmt("%.4f", f1)};
}

// ---------------------------------------------------------------------------

constexpr double kReferenceAccuracy = 0.70;
constexpr double kReferenceSeconds = 300.0;

Outcome reference_run() {
    const auto start = Clock::now();
    std::size_t good = 0;
    std::string accs;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        runner::ExperimentConfig c;
        c.dataset = "iris";
        c.n_qubits = 4;
        c.n_layers = 5;
        c.seed = seed;
        const auto r = runner::run_single(c);
        good += r.metrics.accuracy >= kReferenceAccuracy ? 1 : 0;
        accs += (accs.empty() ? "" : " ") + fmt("%.3f", r.metrics.accuracy);
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {good >= 3 && secs < kReferenceSeconds,
            "accuracies [" + accs + "], " + std::to_string(good) + "/5 at >= 0.70, " +
                fmt("%.1f", secs) + " s"};
}

// ---------------------------------------------------------------------------

constexpr double kProbeSeconds = 600.0;

Outcome barren_plateau() {
    const auto start = Clock::now();
    runner::ExperimentConfig c;
    c.dataset = "iris";
    c.n_layers = 5;
    c.seed = 0;
    const auto rows = runner::gradient_variance(c, {4, 10}, 200);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {rows[1].variance < rows[0].variance && secs < kProbeSeconds,
            "Var at n=4 " + fmt("%.3e", rows[0].variance) + ", at n=10 " +
                fmt("%.3e", rows[1].variance) + ", " + fmt("%.1f", secs) + " s"};
}

// ---------------------------------------------------------------------------

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) {
            cells.push_back(cell);
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

bool run_cli(const std::string &args, const fs::path &out) {
    const std::string cmd = std::string("\"") + QSSL_CLI_PATH + "\" " + args + " --out \"" +
                            out.string() + "\" > \"" + out.string() + ".log\" 2>&1";
    return std::system(cmd.c_str()) == 0;
}

// The qubit sweep trains only a couple of steps: the check is about row
// geometry and reproducibility, and a full-length run at 14 qubits costs
// minutes per epoch.
constexpr const char *kQubitSweepArgs =
    "sweep-qubits --dataset all --qubits 4,8,12,14 --layers 5 --epochs 2 --seed 0";
constexpr const char *kLayerSweepArgs =
    "sweep-layers --dataset iris --qubits 4 --layers 5,10,15,20,25,30 --seed 0";
const char *const kOutputFiles[] = {"results.csv",           "accuracy_vs_qubits.csv",
                                    "accuracy_vs_layers.csv", "entropy_vs_layers.csv",
                                    "accuracy_vs_entropy.csv", "config.json"};

Outcome sweep_shapes() {
    const auto start = Clock::now();
    const fs::path root = fs::temp_directory_path() / ("qssl_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    fs::create_directories(root);
    std::string detail;
    bool pass = true;

    struct Sweep {
        const char *label;
        const char *args;
        std::size_t rows;
        double entropy_bound;
    };
    for (const Sweep &s : {Sweep{"qubits", kQubitSweepArgs, 16, 7.0},
                           Sweep{"layers", kLayerSweepArgs, 6, 2.0}}) {
        // Two invocations with the identical config, so the same output
        // directory; the first run's files are moved aside in between.
        const auto a = root / s.label;
        const auto first = root / (std::string(s.label) + "_first");
        if (!run_cli(s.args, a)) {
            return {false, std::string("qssl ") + s.label + " sweep failed: " +
                               slurp(a.string() + ".log")};
        }
        fs::rename(a, first);
        if (!run_cli(s.args, a)) {
            return {false, std::string("qssl ") + s.label + " rerun failed: " +
                               slurp(a.string() + ".log")};
        }
        bool same = true;
        for (const char *f : kOutputFiles) {
            same = same && fs::exists(a / f) && slurp(a / f) == slurp(first / f);
        }
        const auto rows = csv_rows(slurp(a / "results.csv"));
        const std::size_t body = rows.empty() ? 0 : rows.size() - 1;
        std::size_t entropy_col = 0;
        if (!rows.empty()) {
            const auto &h = rows.front();
            entropy_col = static_cast<std::size_t>(
                std::find(h.begin(), h.end(), "mean_entropy") - h.begin());
        }
        bool bounded = entropy_col < (rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 1; i < rows.size() && bounded; ++i) {
            const std::size_t q = std::stoul(rows[i][1]);
            const double e = std::stod(rows[i][entropy_col]);
            bounded = e >= 0.0 && e <= static_cast<double>((q + 1) / 2) && e <= s.entropy_bound;
        }
        pass = pass && same && body == s.rows && bounded;
        detail += std::string(detail.empty() ? "" : "; ") + s.label + ": " +
                  std::to_string(body) + " rows" + (same ? ", identical reruns" : ", reruns differ") +
                  (bounded ? ", entropy bounded" : ", entropy out of bounds");
    }
    fs::remove_all(root);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {pass, detail + ", " + fmt("%.0f", secs) + " s"};
}

} // namespace

int main(int argc, char **argv) {
    struct Criterion {
        int id;
        const char *name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all = {
        {1, "propagation vs closed form", propagation_oracle},
        {2, "shift-rule gradient vs finite differences", gradient_oracle},
        {3, "entropy invariants", entropy_invariants},
        {4, "partial trace vs outer-product oracle", partial_trace_oracle},
        {5, "embedding unitarity and determinism", unitarity_and_determinism},
        {6, "metrics vs counting oracle", metrics_oracle},
        {7, "iris reference run", reference_run},
        {8, "gradient variance shrinks with qubits", barren_plateau},
        {9, "sweep shapes and reproducibility", sweep_shapes},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) {
        wanted.insert(std::atoi(argv[i]));
    }
    int failed = 0;
    for (const auto &c : all) {
        if (!wanted.empty() && !wanted.contains(c.id)) {
            continue;
        }
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("criterion %d %-44s %s  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
