// SPDX-License-Identifier: Apache-2.0
//
// radiomap: GP quantile maps and outage-constrained rate selection
// Copyright (C) 2026 The radiomap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "radiomap/errors.hpp"
#include "radiomap/quantiles.hpp"
#include "radiomap/rate.hpp"
#include "radiomap/special_functions.hpp"

using namespace radiomap;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Inverse error function") {
    CHECK(inverse_erf(0.0) == 0.0);
    CHECK_THAT(inverse_erf(testing::erf_series(1.0)), WithinAbs(1.0, 1e-8));
    CHECK_THAT(testing::erf_series(1.0), WithinAbs(0.842700793, 1e-9));
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-0.999999, 0.999999);
    for (int i = 0; i < 1000; ++i) {
        const double p = u(rng);
        CHECK(inverse_erf(-p) == -inverse_erf(p));
        CHECK_THAT(testing::erf_series(inverse_erf(p)), WithinAbs(p, 1e-12));
    }
    CHECK_THROWS_AS(inverse_erf(1.0), DomainError);
    CHECK_THROWS_AS(inverse_erf(-1.0), DomainError);
    CHECK_THROWS_AS(inverse_erf(NAN), DomainError);
}

TEST_CASE("Normal quantile agrees with bisection") {
    for (double p : {1e-12, 1e-6, 1e-3, 0.02425, 0.1, 0.5, 0.7, 0.97575, 0.999, 1 - 1e-9}) {
        CHECK_THAT(normal_quantile(p), WithinAbs(testing::normal_quantile_bisection(p), 1e-9));
    }
    CHECK_THAT(normal_quantile(1e-3), WithinAbs(-3.090232306167813, 1e-12));
    CHECK_THROWS_AS(normal_quantile(0.0), DomainError);
    CHECK_THROWS_AS(normal_quantile(1.0), DomainError);
}

TEST_CASE("Predictive rate rule") {
    CHECK(predictive_rate(0.0, 3.7, 0.5) == 1.0);
    for (double d : {1e-4, 0.1, 0.9}) {
        CHECK_THAT(predictive_rate(1.5, 0.0, d), WithinRel(std::log2(1.0 + std::exp(1.5)), 1e-15));
    }
    const double via_erf = std::log2(1.0 + std::exp(2.0 + std::numbers::sqrt2 * inverse_erf(-0.998)));
    const double via_phi = std::log2(1.0 + std::exp(2.0 + testing::normal_quantile_bisection(1e-3)));
    CHECK_THAT(predictive_rate(2.0, 1.0, 1e-3), WithinRel(via_erf, 1e-14));
    CHECK_THAT(predictive_rate(2.0, 1.0, 1e-3), WithinRel(via_phi, 1e-9));
    CHECK_THAT(std::numbers::sqrt2 * inverse_erf(-0.998), WithinAbs(-3.0902, 1e-4));
    CHECK_THROWS_AS(predictive_rate(0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(predictive_rate(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(predictive_rate(0.0, -1.0, 0.1), InvalidArgument);
}

TEST_CASE("log2(1 + e^x) is stable") {
    CHECK_THAT(log2_one_plus_exp(0.0), WithinAbs(1.0, 0.0));
    CHECK_THAT(log2_one_plus_exp(800.0), WithinRel(800.0 / std::numbers::ln2, 1e-15));
    CHECK(log2_one_plus_exp(-800.0) >= 0.0);
    CHECK_THAT(log2_one_plus_exp(-30.0), WithinRel(std::exp(-30.0) / std::numbers::ln2, 1e-12));
}

TEST_CASE("Predictive selection on a map denormalizes the statistics") {
    PredictiveMap map;
    map.grid.points = {{0, 0}, {1, 0}};
    map.mean = {0.5, -1.0};
    map.var = {0.25, 0.0};
    map.q_bar = 1.0;
    map.s = 2.0;
    const RateDecision d = select_rate_predictive(map, 0, 0.1);
    CHECK_THAT(d.mu_l, WithinAbs(2.0, 1e-15));
    CHECK_THAT(d.sigma_l, WithinAbs(1.0, 1e-15));
    CHECK(d.rate_bps_hz == predictive_rate(2.0, 1.0, 0.1));
    CHECK(d.method == RateMethod::predictive);
    CHECK(select_rate_predictive(map, 1, 0.1).rate_bps_hz == log2_one_plus_exp(-1.0));
    CHECK_THROWS_AS(select_rate_predictive(map, 2, 0.1), InvalidArgument);
    const auto all = predictive_rate_map(map, 0.1);
    CHECK(all[0] == d.rate_bps_hz);
}

TEST_CASE("Baseline rule") {
    SnrDataset data;
    data.n_samples = 100;
    data.locations.points = {{0, 0}, {10, 0}, {0, 10}};
    std::mt19937_64 rng(6);
    std::exponential_distribution<double> e(0.2);
    for (int i = 0; i < 300; ++i) data.samples.push_back(e(rng));
    SECTION("an observed location uses its own order statistic") {
        const RateDecision d = select_rate_baseline(data, {10, 0}, 0.05);
        const std::vector<double> row(data.row(1).begin(), data.row(1).end());
        CHECK(d.rate_bps_hz == std::log2(1.0 + testing::sorted_order_statistic(row, 5)));
        CHECK(d.method == RateMethod::baseline);
    }
    SECTION("constant samples give log2(1 + w)") {
        SnrDataset flat = data;
        std::fill(flat.samples.begin() + 200, flat.samples.end(), 7.0);
        CHECK(select_rate_baseline(flat, {1, 9}, 0.05).rate_bps_hz == 3.0);
    }
    SECTION("random targets match nearest neighbour plus sort") {
        std::uniform_real_distribution<double> u(-20, 30);
        for (int i = 0; i < 200; ++i) {
            const Point x{u(rng), u(rng)};
            const std::size_t k = testing::brute_force_nearest(data.locations.points, x);
            const std::vector<double> row(data.row(k).begin(), data.row(k).end());
            CHECK(select_rate_baseline(data, x, 0.03).rate_bps_hz ==
                  std::log2(1.0 + testing::sorted_order_statistic(row, 3)));
        }
    }
    SECTION("too few samples") {
        CHECK_THROWS_AS(select_rate_baseline(data, {0, 0}, 1e-3), InsufficientSamples);
    }
    SECTION("grid form agrees with the point form") {
        LocationSet grid;
        grid.points = {{1, 1}, {9, 1}, {1, 8}, {5, 5}};
        const auto rates = baseline_rate_map(data, grid, 0.1);
        for (std::size_t l = 0; l < grid.size(); ++l) {
            CHECK(rates[l] == select_rate_baseline(data, grid[l], 0.1).rate_bps_hz);
        }
    }
}

TEST_CASE("Outage capacity") {
    CHECK(outage_capacity(1.0) == 1.0);
    CHECK(outage_capacity(3.0) == 2.0);
    std::vector<double> samples(1000);
    std::mt19937_64 rng(10);
    std::exponential_distribution<double> e(1.0);
    for (double& w : samples) w = e(rng);
    const double q = estimate_log_quantile(samples, 0.01);
    const std::vector<double> copy = samples;
    CHECK_THAT(outage_capacity(std::exp(q)), WithinRel(std::log2(1.0 + testing::sorted_order_statistic(copy, 10)), 1e-14));
    CHECK_THROWS_AS(outage_capacity(0.0), DomainError);
}
