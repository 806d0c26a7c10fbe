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

#include <algorithm>
#include <numeric>
#include <random>

#include "qssl/error.hpp"
#include "qssl/eval/metrics.hpp"

using namespace qssl;
using namespace qssl::eval;
using Catch::Approx;

TEST_CASE("confusion counts") {
    const std::vector<int> t{1, 1, 0, 0}, p{1, 0, 1, 0};
    CHECK(confusion(t, p) == Confusion{1, 1, 1, 1});
    const std::vector<int> y{1, 0, 1, 1, 0};
    CHECK(confusion(y, y) == Confusion{3, 0, 0, 2});
    CHECK_THROWS_AS(confusion(t, std::vector<int>{1}), ShapeError);
    CHECK_THROWS_AS(confusion({}, {}), ShapeError);
    CHECK_THROWS_AS(confusion(std::vector<int>{2}, std::vector<int>{1}), ValidationError);
}

TEST_CASE("confusion matches an element-wise counting oracle") {
    std::mt19937_64 gen(1);
    for (int draw = 0; draw < 1000; ++draw) {
        const std::size_t n = 1 + gen() % 300;
        std::vector<int> t(n), p(n);
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = static_cast<int>(gen() & 1U);
            p[i] = static_cast<int>(gen() & 1U);
        }
        std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
        for (std::size_t i = 0; i < n; ++i) {
            tp += t[i] == 1 && p[i] == 1;
            fp += t[i] == 0 && p[i] == 1;
            fn += t[i] == 1 && p[i] == 0;
            tn += t[i] == 0 && p[i] == 0;
        }
        const auto c = confusion(t, p);
        REQUIRE(c == Confusion{tp, fp, fn, tn});
        const auto m = metrics_from_confusion(c);
        REQUIRE(m.accuracy == static_cast<double>(tp + tn) / static_cast<double>(n));
        REQUIRE(m.precision ==
                (tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp)));
        REQUIRE(m.recall ==
                (tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn)));

        // Joint permutation leaves counts unchanged; swapping classes swaps them.
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), gen);
        std::vector<int> tp_(n), pp(n), ts(n), ps(n);
        for (std::size_t i = 0; i < n; ++i) {
            tp_[i] = t[perm[i]];
            pp[i] = p[perm[i]];
            ts[i] = 1 - t[i];
            ps[i] = 1 - p[i];
        }
        REQUIRE(confusion(tp_, pp) == c);
        REQUIRE(confusion(ts, ps) == Confusion{tn, fn, fp, tp});
    }
}

TEST_CASE("metrics from counts") {
    const auto m = metrics_from_confusion({1, 1, 1, 1});
    CHECK(m.accuracy == 0.5);
    CHECK(m.precision == 0.5);
    CHECK(m.recall == 0.5);
    CHECK(m.f1 == 0.5);

    const auto z = metrics_from_confusion({0, 0, 5, 5});
    CHECK(z.precision == 0.0);
    CHECK(z.recall == 0.0);
    CHECK(z.f1 == 0.0);
    CHECK(z.accuracy == 0.5);

    CHECK(f1_score(0.666, 0.938) == Approx(0.779).margin(1e-3));
}

TEST_CASE("f1 is the harmonic mean of precision and recall") {
    std::mt19937_64 gen(2);
    for (int draw = 0; draw < 1000; ++draw) {
        const Confusion c{1 + gen() % 50, 1 + gen() % 50, 1 + gen() % 50, gen() % 50};
        const auto m = metrics_from_confusion(c);
        CHECK(m.f1 == Approx(2.0 / (1.0 / m.precision + 1.0 / m.recall)).margin(1e-12));
        CHECK(m.counts.total() == c.tp + c.fp + c.fn + c.tn);
    }
}
