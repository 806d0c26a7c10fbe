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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "qssl/error.hpp"
#include "qssl/linalg/qr.hpp"
#include "qssl/vqc/circuit.hpp"
#include "qssl/vqc/cost.hpp"
#include "qssl/vqc/embedding.hpp"
#include "qssl/vqc/optim.hpp"
#include "qssl/vqc/train.hpp"
#include "support/oracles.hpp"

using namespace qssl;
using Catch::Approx;
using std::numbers::pi;

namespace {

// Random unitary as a product of random single-qubit rotations and CNOTs,
// multiplied out densely.
oracle::Dense random_dense_unitary(std::size_t n, std::mt19937_64 &gen) {
    std::uniform_real_distribution<double> ang(0.0, 2 * pi);
    oracle::Dense u = oracle::eye(std::size_t{1} << n);
    for (int rep = 0; rep < 3; ++rep) {
        for (std::size_t w = 0; w < n; ++w) {
            u = oracle::mul(oracle::lift(oracle::ry(ang(gen)), w, n), u);
            u = oracle::mul(oracle::lift(oracle::rz(ang(gen)), w, n), u);
        }
        for (std::size_t w = 0; w + 1 < n; ++w) {
            u = oracle::mul(oracle::cnot(w, w + 1, n), u);
        }
    }
    return u;
}

qsim::GateMatrix to_gate(const oracle::Dense &d) {
    qsim::GateMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
            m(i, j) = d[i][j];
        }
    }
    return m;
}

double oracle_forward(const std::vector<double> &x, const vqc::AnsatzParams &p,
                      const oracle::Dense &u, std::size_t n) {
    oracle::Dense c = oracle::eye(std::size_t{1} << n);
    for (std::size_t w = 0; w < n; ++w) {
        c = oracle::mul(oracle::lift(oracle::rx(x[w]), w, n), c);
    }
    c = oracle::mul(u, c);
    for (std::size_t l = 0; l < p.layers(); ++l) {
        for (std::size_t w = 0; w < n; ++w) {
            const auto rot = oracle::mul(oracle::rz(p(l, w, 2)),
                                         oracle::mul(oracle::ry(p(l, w, 1)), oracle::rz(p(l, w, 0))));
            c = oracle::mul(oracle::lift(rot, w, n), c);
        }
        if (n > 1) {
            const std::size_t r = (l % (n - 1)) + 1;
            for (std::size_t w = 0; w < n; ++w) {
                c = oracle::mul(oracle::cnot(w, (w + r) % n, n), c);
            }
        }
    }
    std::vector<oracle::cplx> psi(std::size_t{1} << n);
    psi[0] = 1.0;
    return oracle::expect_z(oracle::apply(c, psi), 0, n);
}

vqc::AnsatzParams random_params(std::size_t l, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return vqc::AnsatzParams::random(l, n, rng);
}

} // namespace

TEST_CASE("identity circuit on |0...0> gives logit +1") {
    vqc::CircuitConfig cfg{3, 2, {}, 0};
    const std::vector<double> x(3, 0.0);
    CHECK(vqc::forward(x, vqc::AnsatzParams(2, 3), cfg) == Approx(1.0).margin(1e-12));
}

TEST_CASE("no layers, RX(pi) on wire 0 gives logit -1") {
    vqc::CircuitConfig cfg{3, 0, {}, 0};
    const std::vector<double> x{pi, 0.0, 0.0};
    CHECK(vqc::forward(x, vqc::AnsatzParams(0, 3), cfg) == Approx(-1.0).margin(1e-12));
}

TEST_CASE("forward matches a dense matrix-chain oracle") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> feat(-pi, pi);
    for (std::size_t n : {1U, 2U, 3U}) {
        for (std::size_t layers : {0U, 1U, 3U}) {
            const auto u = random_dense_unitary(n, gen);
            vqc::CircuitConfig cfg{n, layers, vqc::EmbedUnitary(to_gate(u)), 0};
            for (int rep = 0; rep < 5; ++rep) {
                std::vector<double> x(n);
                for (auto &v : x) {
                    v = feat(gen);
                }
                const auto p = random_params(layers, n, gen());
                CHECK(vqc::forward(x, p, cfg) ==
                      Approx(oracle_forward(x, p, u, n)).margin(1e-10));
            }
        }
    }
}

TEST_CASE("zero angles leave only embedding, unitary and CNOT rings") {
    std::mt19937_64 gen(5);
    const std::size_t n = 3;
    const auto u = random_dense_unitary(n, gen);
    vqc::CircuitConfig cfg{n, 4, vqc::EmbedUnitary(to_gate(u)), 0};
    const std::vector<double> x{0.3, -1.1, 2.0};
    const vqc::AnsatzParams zero(4, n);
    CHECK(vqc::forward(x, zero, cfg) == Approx(oracle_forward(x, zero, u, n)).margin(1e-10));
}

TEST_CASE("logit is bounded by one") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> feat(-10, 10);
    vqc::CircuitConfig cfg{4, 3, {}, 2};
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> x(4);
        for (auto &v : x) {
            v = feat(gen);
        }
        CHECK(std::abs(vqc::forward(x, random_params(3, 4, gen()), cfg)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("forward rejects mismatched shapes") {
    vqc::CircuitConfig cfg{3, 2, {}, 0};
    const std::vector<double> x(3, 0.0);
    CHECK_THROWS_AS(vqc::forward(x, vqc::AnsatzParams(2, 4), cfg), ShapeError);
    CHECK_THROWS_AS(vqc::forward(x, vqc::AnsatzParams(1, 3), cfg), ShapeError);
    CHECK_THROWS_AS(vqc::forward(std::vector<double>(2), vqc::AnsatzParams(2, 3), cfg),
                    ShapeError);
    vqc::CircuitConfig bad{3, 0, vqc::EmbedUnitary(qsim::GateMatrix::identity(4)), 0};
    CHECK_THROWS_AS(bad.validate(), ShapeError);
}

TEST_CASE("probability and predict") {
    CHECK(vqc::probability(0.0) == 0.5);
    CHECK(vqc::probability(50.0) == Approx(1.0).margin(1e-15));
    CHECK(vqc::probability(1.0) == Approx(1.0 / (1.0 + std::exp(-1.0))).epsilon(1e-15));
    CHECK(vqc::probability(1.0) == Approx(0.7310585786300049).epsilon(1e-14));
    CHECK(vqc::predict(0.3) == 1);
    CHECK(vqc::predict(-0.3) == 0);
    CHECK(vqc::predict(0.0) == 0);
}

TEST_CASE("binary cross-entropy") {
    const std::vector<double> zeros(7, 0.0);
    const std::vector<int> labels{1, 0, 1, 1, 0, 0, 1};
    CHECK(vqc::bce_from_logits(zeros, labels) == Approx(std::log(2.0)).epsilon(1e-14));

    const std::vector<double> two{1.0, -1.0};
    const std::vector<int> y{1, 0};
    const double p = 1.0 / (1.0 + std::exp(-1.0));
    CHECK(vqc::bce_from_logits(two, y) == Approx(-std::log(p)).epsilon(1e-14));
    CHECK(vqc::bce_from_logits(two, y) == Approx(0.313262).margin(1e-6));

    // Saturated logits are clamped rather than producing log(0).
    const std::vector<double> huge{1000.0, -1000.0};
    CHECK(vqc::bce_from_logits(huge, std::vector<int>{1, 0}) ==
          Approx(0.0).margin(1e-11));
    CHECK(std::isfinite(vqc::bce_from_logits(huge, std::vector<int>{0, 1})));

    CHECK_THROWS_AS(vqc::bce_from_logits({}, {}), ValidationError);
    CHECK_THROWS_AS(vqc::bce_from_logits(two, std::vector<int>{1}), ShapeError);
    CHECK_THROWS_AS(vqc::bce_from_logits(two, std::vector<int>{1, 2}), ValidationError);
}

TEST_CASE("shift rule on a single RY angle follows cos theta") {
    // One qubit, one layer: only theta (index 1) acts nontrivially on |0>.
    qsim::StateVector prepared(1);
    std::vector<double> grad(3);
    vqc::AnsatzParams p(1, 1);
    vqc::expectation_grad_param_shift(prepared, p, 0, grad);
    CHECK(grad[1] == Approx(0.0).margin(1e-14));
    p(0, 0, 1) = pi / 2;
    const double value = vqc::expectation_grad_param_shift(prepared, p, 0, grad);
    CHECK(value == Approx(0.0).margin(1e-14));
    CHECK(grad[1] == Approx(-1.0).epsilon(1e-14));
    vqc::expectation_grad_adjoint(prepared, p, 0, grad);
    CHECK(grad[1] == Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("cost gradients match central finite differences") {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> feat(-pi, pi);
    const std::size_t n = 4, layers = 2, samples = 6;
    linalg::RealMatrix x(samples, n);
    for (auto &v : x.data()) {
        v = feat(gen);
    }
    const std::vector<int> y{1, 0, 0, 1, 1, 0};
    vqc::CircuitConfig cfg{n, layers, vqc::EmbedUnitary(to_gate(random_dense_unitary(n, gen))), 0};
    const double h = 1e-5;
    for (int draw = 0; draw < 10; ++draw) {
        auto p = random_params(layers, n, gen());
        const auto ps = vqc::param_shift_grad(p, x, y, cfg);
        const auto adj = vqc::adjoint_grad(p, x, y, cfg);
        double worst_fd = 0.0, worst_adj = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            const double orig = p.flat()[k];
            p.flat()[k] = orig + h;
            const double up = vqc::bce_cost(p, x, y, cfg);
            p.flat()[k] = orig - h;
            const double down = vqc::bce_cost(p, x, y, cfg);
            p.flat()[k] = orig;
            const double fd = (up - down) / (2 * h);
            worst_fd = std::max(worst_fd, std::abs(ps.flat()[k] - fd));
            worst_adj = std::max(worst_adj, std::abs(ps.flat()[k] - adj.flat()[k]));
        }
        CHECK(worst_fd <= 1e-5);
        CHECK(worst_adj <= 1e-12);
    }
}

TEST_CASE("adjoint and shift-rule expectation gradients agree on other measure wires") {
    std::mt19937_64 gen(8);
    const std::size_t n = 5, layers = 3;
    qsim::StateVector prepared(n, oracle::random_state(n, gen));
    const auto p = random_params(layers, n, 77);
    std::vector<double> g1(p.size()), g2(p.size());
    for (std::size_t wire = 0; wire < n; ++wire) {
        const double v1 = vqc::expectation_grad_param_shift(prepared, p, wire, g1);
        const double v2 = vqc::expectation_grad_adjoint(prepared, p, wire, g2);
        CHECK(v1 == Approx(v2).margin(1e-13));
        for (std::size_t k = 0; k < p.size(); ++k) {
            CHECK(g1[k] == Approx(g2[k]).margin(1e-12));
        }
    }
}

TEST_CASE("adam") {
    SECTION("zero gradient leaves parameters alone and decays moments") {
        std::vector<double> p{0.5, -0.25};
        vqc::AdamState st(2);
        st.m = {1.0, 2.0};
        st.v = {4.0, 8.0};
        const std::vector<double> g(2, 0.0);
        const auto before = p;
        vqc::adam_step(p, g, st, 0.01);
        CHECK(st.m[0] == Approx(0.9));
        CHECK(st.v[1] == Approx(8.0 * 0.999));
        // Stale moments move parameters; a fresh state must not.
        vqc::AdamState fresh(2);
        auto q = before;
        vqc::adam_step(q, g, fresh, 0.01);
        CHECK(q == before);
    }
    SECTION("first step has magnitude lr") {
        for (double g : {0.1, 0.7, -42.0}) {
            std::vector<double> p{1.0};
            vqc::AdamState st(1);
            vqc::adam_step(p, std::vector<double>{g}, st, 0.01);
            CHECK(std::abs(1.0 - p[0]) == Approx(0.01).epsilon(1e-6));
            CHECK((1.0 - p[0]) * g > 0.0);
        }
    }
    SECTION("three steps with constant gradient follow the recurrence") {
        std::vector<double> p{0.0};
        vqc::AdamState st(1);
        const std::vector<double> g{1.0};
        // m_t = 1 - 0.9^t and v_t = 1 - 0.999^t, so both bias-corrected
        // moments are exactly 1 and every step moves by lr / (1 + eps).
        const double expected[] = {-0.0099999999, -0.0199999998, -0.0299999997};
        for (double e : expected) {
            vqc::adam_step(p, g, st, 0.01);
            CHECK(p[0] == Approx(e).epsilon(1e-12));
        }
        CHECK(st.step == 3);
        CHECK(st.m[0] == Approx(1.0 - 0.729).epsilon(1e-14));
        CHECK(st.v[0] == Approx(1.0 - std::pow(0.999, 3)).epsilon(1e-14));
    }
    SECTION("shape mismatch") {
        std::vector<double> p{0.0, 1.0};
        vqc::AdamState st(2);
        CHECK_THROWS_AS(vqc::adam_step(p, std::vector<double>{1.0}, st, 0.1), ShapeError);
    }
}

TEST_CASE("embedding: identity and permutation inputs are reproduced") {
    const auto id = vqc::embed_adjacency_factor(linalg::RealMatrix::identity(8), 3, 1);
    CHECK(linalg::max_abs_diff(id.dense(), linalg::RealMatrix::identity(8)) <= 1e-15);

    linalg::RealMatrix perm{{0, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}};
    for (auto backend : {linalg::QrBackend::reference, linalg::QrBackend::blocked}) {
        const auto q = vqc::embed_adjacency_factor(perm, 2, 9, backend);
        CHECK(linalg::max_abs_diff(q.dense(), perm) <= 1e-15);
    }
}

TEST_CASE("embedding: unitary, deterministic, and sized by the register") {
    Rng rng(3);
    for (std::size_t nodes : {5U, 16U, 40U}) {
        linalg::RealMatrix a(nodes, nodes);
        for (std::size_t i = 0; i < nodes; ++i) {
            for (std::size_t j = i + 1; j < nodes; ++j) {
                a(i, j) = a(j, i) = rng.uniform();
            }
        }
        for (std::size_t n : {1U, 3U, 4U, 5U}) {
            const auto u1 = vqc::embed_adjacency_unitary(a, n, 17);
            const auto u2 = vqc::embed_adjacency_unitary(a, n, 17);
            CHECK(u1.dim() == (std::size_t{1} << n));
            const auto d1 = u1.dense(0);
            CHECK(linalg::unitarity_defect(d1) <= 1e-10);
            CHECK(d1 == u2.dense(0));
        }
    }
}

TEST_CASE("embedding: padding is seeded, symmetric and keeps the input block") {
    linalg::RealMatrix a{{0, 0.3, 0.2}, {0.3, 0, 0.9}, {0.2, 0.9, 0}};
    const auto p1 = vqc::resize_adjacency(a, 3, 5);
    const auto p2 = vqc::resize_adjacency(a, 3, 5);
    const auto p3 = vqc::resize_adjacency(a, 3, 6);
    CHECK(p1 == p2);
    CHECK_FALSE(p1 == p3);
    CHECK(p1 == linalg::transpose(p1));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(p1(i, j) == a(i, j));
        }
    }
    for (double v : p1.data()) {
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
    const auto t = vqc::resize_adjacency(p1, 2, 5);
    CHECK(t.rows() == 4);
    CHECK(t(3, 1) == p1(3, 1));
}

TEST_CASE("embedding: rank deficiency is retried once, then reported") {
    // All-zero input: the diagonal shift makes it a multiple of the identity.
    const auto q = vqc::embed_adjacency_factor(linalg::RealMatrix(4, 4), 2, 0);
    CHECK(linalg::max_abs_diff(q.dense(), linalg::RealMatrix::identity(4)) <= 1e-15);
    // A shift of 1e-8 is invisible next to entries of 1e9.
    linalg::RealMatrix big{{1e9, 1e9}, {1e9, 1e9}};
    CHECK_THROWS_AS(vqc::embed_adjacency_factor(big, 1, 0), NumericalError);
}

TEST_CASE("training") {
    const std::size_t n = 3;
    linalg::RealMatrix x{{0.1, 0.5, -0.3}, {2.5, 2.9, 3.0}, {0.2, -0.1, 0.0}, {3.1, 2.7, 2.4}};
    const std::vector<int> y{0, 1, 0, 1};
    vqc::CircuitConfig cfg{n, 2, {}, 0};

    SECTION("zero epochs returns the initial parameters") {
        const auto [p, rec] = vqc::train(x, y, cfg, {0.01, 0, 99});
        Rng rng(99);
        CHECK(p == vqc::AnsatzParams::random(2, n, rng));
        CHECK(rec.costs.empty());
        CHECK(rec.steps == 0);
        CHECK(rec.final_params == p);
    }
    SECTION("bit-identical under a fixed seed") {
        const auto a = vqc::train(x, y, cfg, {0.05, 20, 4});
        const auto b = vqc::train(x, y, cfg, {0.05, 20, 4});
        CHECK(a.first == b.first);
        CHECK(a.second.costs == b.second.costs);
        CHECK(a.second.costs.size() == 20);
        const auto c = vqc::train(x, y, cfg, {0.05, 20, 5});
        CHECK_FALSE(a.first == c.first);
    }
    SECTION("gradient methods produce the same trajectory") {
        const auto a = vqc::train(x, y, cfg, {0.05, 10, 4, vqc::GradientMethod::adjoint});
        const auto b = vqc::train(x, y, cfg, {0.05, 10, 4, vqc::GradientMethod::param_shift});
        for (std::size_t k = 0; k < a.first.size(); ++k) {
            CHECK(a.first.flat()[k] == Approx(b.first.flat()[k]).margin(1e-10));
        }
    }
    SECTION("separable two-point problem is fit") {
        linalg::RealMatrix toy{{pi}, {0.0}};
        const std::vector<int> toy_y{1, 0};
        vqc::CircuitConfig one{1, 1, {}, 0};
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto [p, rec] = vqc::train(toy, toy_y, one, {0.05, 200, seed});
            int correct = 0;
            for (std::size_t i = 0; i < 2; ++i) {
                correct += vqc::predict(vqc::forward(toy.row(i), p, one)) == toy_y[i];
            }
            CHECK(correct == 2);
            CHECK(rec.costs.back() < rec.costs.front());
        }
    }
    SECTION("invalid inputs") {
        CHECK_THROWS_AS(vqc::train(linalg::RealMatrix(0, n), {}, cfg, {}), ValidationError);
        CHECK_THROWS_AS(vqc::train(x, y, cfg, {-1.0, 1, 0}), ValidationError);
    }
}
