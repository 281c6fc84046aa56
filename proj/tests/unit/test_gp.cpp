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
#include "radiomap/channel.hpp"
#include "radiomap/errors.hpp"
#include "radiomap/geometry.hpp"
#include "radiomap/gp.hpp"

using namespace radiomap;
using Catch::Matchers::WithinAbs;

TEST_CASE("Kernel values") {
    const GpHyperparams hp{2.5, 20.0, 0.1};
    CHECK(kernel({3, 4}, {3, 4}, hp) == 2.5);
    CHECK_THAT(kernel({0, 0}, {12, 16}, hp), WithinAbs(2.5 * std::exp(-1.0), 1e-15));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-50, 50);
    for (int i = 0; i < 100; ++i) {
        const Point a{u(rng), u(rng)};
        const Point b{u(rng), u(rng)};
        CHECK(kernel(a, b, hp) == kernel(b, a, hp));
    }
}

TEST_CASE("Hyperparameter validation") {
    CHECK_THROWS_AS(GpHyperparams({0.0, 1.0, 0.0}).validate(), InvalidArgument);
    CHECK_THROWS_AS(GpHyperparams({1.0, 0.0, 0.0}).validate(), InvalidArgument);
    CHECK_THROWS_AS(GpHyperparams({1.0, 1.0, -1e-9}).validate(), InvalidArgument);
    CHECK_NOTHROW(GpHyperparams({1.0, 1.0, 0.0}).validate());
    FitBounds b;
    b.corr_dist_min = 600.0;
    CHECK_THROWS_AS(b.validate(), InvalidArgument);
}

TEST_CASE("Prediction edge cases") {
    LocationSet one;
    one.points = {{5, 5}};
    const std::vector<double> rho{0.7};
    SECTION("noise-free single point interpolates") {
        const PredictiveMap m = predict(one, rho, one, {1.3, 10.0, 0.0});
        CHECK_THAT(m.mean[0], WithinAbs(0.7, 1e-12));
        CHECK_THAT(m.var[0], WithinAbs(0.0, 1e-12));
    }
    SECTION("far away the prior returns") {
        LocationSet far;
        far.points = {{5000, 5000}};
        far.region = {-1e4, 1e4, -1e4, 1e4};
        const GpHyperparams hp{1.3, 10.0, 0.01};
        const PredictiveMap m = predict(one, rho, far, hp);
        CHECK(std::abs(m.mean[0]) <= 1e-6 * std::sqrt(hp.signal_var));
        CHECK_THAT(m.var[0], WithinAbs(hp.signal_var, 1e-6));
    }
    SECTION("norm stats are carried from the quantile dataset") {
        QuantileDataset qd;
        qd.locations = one;
        qd.q_hat = {1.0};
        qd.rho_hat = rho;
        qd.q_bar = 2.0;
        qd.s = 3.0;
        const PredictiveMap m = predict(qd, one, {1.0, 10.0, 0.1});
        CHECK(m.q_bar == 2.0);
        CHECK(m.s == 3.0);
    }
    SECTION("length mismatch is rejected") {
        CHECK_THROWS_AS(predict(one, std::vector<double>{1, 2}, one, {}), InvalidArgument);
    }
}

TEST_CASE("Random D = 20 prediction matches the explicit-inverse oracle") {
    const auto inst = testing::random_gp_instance(20, 100, 77);
    const PredictiveMap m = predict(inst.train, inst.rho, inst.grid, inst.hp);
    const auto o = testing::dense_gp_oracle(inst.train.points, inst.rho, inst.grid.points, inst.hp);
    for (std::size_t l = 0; l < m.size(); ++l) {
        CHECK_THAT(m.mean[l], WithinAbs(o.mean[l], 1e-8));
        CHECK_THAT(m.var[l], WithinAbs(std::max(0.0, o.var[l]), 1e-8));
    }
}

TEST_CASE("Log marginal likelihood") {
    LocationSet one;
    one.points = {{0, 0}};
    const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    CHECK_THAT(log_marginal_likelihood(one, std::vector<double>{0.0}, {0.75, 10.0, 0.25}),
               WithinAbs(-half_log_2pi, 1e-14));
    CHECK_THAT(log_marginal_likelihood(one, std::vector<double>{1.0}, {0.75, 10.0, 0.25}),
               WithinAbs(-0.5 - half_log_2pi, 1e-14));
    CHECK_THAT(-half_log_2pi, WithinAbs(-0.9189385, 1e-7));

    const auto inst = testing::random_gp_instance(10, 0, 31);
    const auto o = testing::dense_gp_oracle(inst.train.points, inst.rho, {}, inst.hp);
    CHECK_THAT(log_marginal_likelihood(inst.train, inst.rho, inst.hp), WithinAbs(o.log_marginal_likelihood, 1e-8));
}

TEST_CASE("Hyperparameter fit") {
    SECTION("fitted likelihood dominates the generating parameters") {
        const GpHyperparams truth{1.0, 20.0, 0.01};
        ThomasParams tp;
        tp.target_count = 200;
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const LocationSet locs = sample_thomas(tp, Region{}, 100 + seed);
            const std::vector<double> rho = testing::sample_gp_prior(locs, truth, 200 + seed);
            FitSettings s;
            s.seed = 400 + seed;
            const FitResult r = fit_hyperparameters(locs, rho, s);
            CHECK(r.log_likelihood >= log_marginal_likelihood(locs, rho, truth) - 1e-9);
            CHECK(r.hyperparams.corr_dist >= 5.0);
            CHECK(r.hyperparams.corr_dist <= 80.0);
        }
    }
    SECTION("zero observations drive the signal variance to its lower bound") {
        const LocationSet locs = sample_binomial(30, Region{}, 5);
        const std::vector<double> rho(30, 0.0);
        FitSettings s;
        s.seed = 9;
        const FitResult r = fit_hyperparameters(locs, rho, s);
        CHECK(r.hyperparams.signal_var <= 1.01 * s.bounds.signal_var_min);
        CHECK(r.hyperparams.noise_var <= 1.01 * s.bounds.noise_var_min);
    }
    SECTION("the returned point is at least as good as every start") {
        const auto inst = testing::random_gp_instance(40, 0, 12);
        FitSettings s;
        s.seed = 3;
        const FitResult r = fit_hyperparameters(inst.train, inst.rho, s);
        REQUIRE(r.starts.size() == s.n_starts);
        for (const FitStart& st : r.starts) {
            CHECK(r.log_likelihood >= st.initial_log_likelihood);
            CHECK(r.log_likelihood >= st.final_log_likelihood);
        }
        CHECK_THAT(r.log_likelihood, WithinAbs(log_marginal_likelihood(inst.train, inst.rho, r.hyperparams), 1e-9));
        const FitBounds& b = s.bounds;
        CHECK(r.hyperparams.signal_var >= b.signal_var_min);
        CHECK(r.hyperparams.signal_var <= b.signal_var_max);
        CHECK(r.hyperparams.corr_dist >= b.corr_dist_min);
        CHECK(r.hyperparams.corr_dist <= b.corr_dist_max);
        CHECK(r.hyperparams.noise_var >= b.noise_var_min);
        CHECK(r.hyperparams.noise_var <= b.noise_var_max);
    }
    SECTION("same seed, same answer") {
        const auto inst = testing::random_gp_instance(25, 0, 13);
        FitSettings s;
        s.seed = 21;
        CHECK(fit_hyperparameters(inst.train, inst.rho, s).hyperparams ==
              fit_hyperparameters(inst.train, inst.rho, s).hyperparams);
    }
    SECTION("errors") {
        const auto inst = testing::random_gp_instance(6, 0, 14);
        LocationSet four = inst.train;
        four.points.resize(4);
        CHECK_THROWS_AS(fit_hyperparameters(four, std::vector<double>(4, 0.0)), InvalidArgument);
        std::vector<double> bad = inst.rho;
        bad[0] = NAN;
        CHECK_THROWS_AS(fit_hyperparameters(inst.train, bad), FitDiverged);
    }
}
