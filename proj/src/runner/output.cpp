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

#include "qssl/runner/output.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qssl/rng.hpp"

namespace qssl::runner {
namespace {

namespace fs = std::filesystem;

void write_file(const fs::path &path, const std::string &body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << body;
    out.flush();
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

void make_dir(const fs::path &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
    }
}

std::string config_snapshot(const ExperimentConfig &config) {
    auto j = nlohmann::ordered_json::parse(to_json(config));
    j["rng"] = kRngAlgorithm;
    return j.dump(2) + "\n";
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

std::string results_csv(std::span<const RunResult> results, bool record_timing) {
    std::ostringstream out;
    out << kResultsHeader << '\n';
    for (const auto &r : results) {
        out << r.config.dataset << ',' << r.config.n_qubits << ',' << r.config.n_layers << ','
            << r.config.seed << ',' << format_double(r.metrics.accuracy) << ','
            << format_double(r.metrics.precision) << ',' << format_double(r.metrics.recall)
            << ',' << format_double(r.metrics.f1) << ',' << format_double(r.mean_entropy) << ','
            << format_double(r.final_cost) << ','
            << (record_timing ? format_double(r.wall_time_s) : std::string("NA")) << '\n';
    }
    return out.str();
}

void emit_outputs(std::span<const RunResult> results, const ExperimentConfig &config,
                  const fs::path &out_dir) {
    make_dir(out_dir);
    write_file(out_dir / "results.csv", results_csv(results, config.record_timing));

    std::ostringstream by_qubits, by_layers, entropy, scatter;
    by_qubits << "dataset,qubits,test_accuracy\n";
    by_layers << "dataset,layers,test_accuracy\n";
    entropy << "dataset,layers,mean_entropy\n";
    scatter << "dataset,qubits,layers,mean_entropy,test_accuracy\n";
    for (const auto &r : results) {
        const auto &c = r.config;
        const auto acc = format_double(r.metrics.accuracy);
        const auto ent = format_double(r.mean_entropy);
        by_qubits << c.dataset << ',' << c.n_qubits << ',' << acc << '\n';
        by_layers << c.dataset << ',' << c.n_layers << ',' << acc << '\n';
        entropy << c.dataset << ',' << c.n_layers << ',' << ent << '\n';
        scatter << c.dataset << ',' << c.n_qubits << ',' << c.n_layers << ',' << ent << ','
                << acc << '\n';
    }
    write_file(out_dir / "accuracy_vs_qubits.csv", by_qubits.str());
    write_file(out_dir / "accuracy_vs_layers.csv", by_layers.str());
    write_file(out_dir / "entropy_vs_layers.csv", entropy.str());
    write_file(out_dir / "accuracy_vs_entropy.csv", scatter.str());
    write_file(out_dir / "config.json", config_snapshot(config));
}

void emit_gradient_variance(std::span<const GradientVariance> rows,
                            const ExperimentConfig &config, const fs::path &out_dir) {
    make_dir(out_dir);
    std::ostringstream out;
    out << "dataset,qubits,layers,draws,mean,variance\n";
    for (const auto &r : rows) {
        out << r.dataset << ',' << r.n_qubits << ',' << config.n_layers << ',' << r.draws << ','
            << format_double(r.mean) << ',' << format_double(r.variance) << '\n';
    }
    write_file(out_dir / "gradient_variance.csv", out.str());
    write_file(out_dir / "config.json", config_snapshot(config));
}

} // namespace qssl::runner
