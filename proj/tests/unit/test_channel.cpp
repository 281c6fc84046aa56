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
#include <numeric>

#include "radiomap/channel.hpp"
#include "radiomap/errors.hpp"
#include "radiomap/quantiles.hpp"
#include "radiomap/random.hpp"

using namespace radiomap;
using Catch::Matchers::WithinAbs;

namespace {

LinkBudget flat_budget() {
    LinkBudget b;
    b.bs_height_m = 1.5;  // equal heights: 3-D distance equals the horizontal one
    b.ue_height_m = 1.5;
    return b;
}

GroundTruth single(double mean_db, double k_db) {
    GroundTruth t;
    t.locations.points = {{0, 0}};
    t.mean_snr_db = {mean_db};
    t.kfactor_db = {k_db};
    t.shadowing_db = {0};
    t.kfactor_dev_db = {0};
    return t;
}

}  // namespace

TEST_CASE("Log-distance pathloss") {
    const LinkBudget b = flat_budget();
    PathlossParams pl{-40.0, 2.0, 1.0};
    CHECK(pathloss_db({1.0, 0.0}, b, pl) == -40.0);
    CHECK_THAT(pathloss_db({10.0, 0.0}, b, pl), WithinAbs(-60.0, 1e-12));
    pl.eta = 0.0;
    CHECK(pathloss_db({37.0, -12.0}, b, pl) == -40.0);
    pl.eta = 2.7;
    // Closer than d0 is clamped to d0.
    CHECK(pathloss_db({0.0, 0.0}, b, pl) == -40.0);
    // Default heights put the base station 8.5 m above the user.
    CHECK_THAT(pathloss_db({0.0, 0.0}, LinkBudget{}, pl), WithinAbs(-40.0 - 27.0 * std::log10(8.5), 1e-12));
}

TEST_CASE("Parameter validation") {
    LinkBudget b;
    b.bandwidth_hz = 0.0;
    CHECK_THROWS_AS(b.validate(), InvalidArgument);
    b = {};
    b.noise_power_dbm = INFINITY;
    CHECK_THROWS_AS(b.validate(), InvalidArgument);
    CHECK_THROWS_AS(PathlossParams({0.0, -1.0, 1.0}).validate(), InvalidArgument);
    CHECK_THROWS_AS(PathlossParams({0.0, 2.0, 0.0}).validate(), InvalidArgument);
    FieldParams f;
    f.shadow_std_db = -1.0;
    CHECK_THROWS_AS(f.validate(), InvalidArgument);
    f = {};
    f.kfactor_corr_dist_m = 0.0;
    CHECK_THROWS_AS(f.validate(), InvalidArgument);
}

TEST_CASE("Gaussian field sampling") {
    const std::vector<Point> pts{{0, 0}, {3, 4}, {10, -2}};
    SECTION("zero std gives zeros") {
        for (double v : sample_gaussian_field(pts, 0.0, 20.0, 5)) CHECK(v == 0.0);
    }
    SECTION("single-location marginal has the requested std") {
        const std::vector<Point> one{{7, 7}};
        double ss = 0.0;
        for (std::uint64_t s = 0; s < 10000; ++s) {
            const double v = sample_gaussian_field(one, 6.0, 20.0, derive_seed(99, "m", s))[0];
            ss += v * v;
        }
        CHECK(std::abs(std::sqrt(ss / 10000.0) - 6.0) <= 0.03 * 6.0);
    }
    SECTION("coincident locations share the value") {
        const std::vector<Point> twins{{1, 2}, {5, 5}, {1, 2}};
        for (std::uint64_t s = 0; s < 50; ++s) {
            const auto v = sample_gaussian_field(twins, 4.0, 10.0, s);
            CHECK(v[0] == v[2]);
        }
    }
}

TEST_CASE("Conditional field extension") {
    const std::vector<Point> support{{0, 0}, {10, 0}, {0, 10}};
    const auto values = sample_gaussian_field(support, 5.0, 20.0, 4);
    SECTION("targets on the support copy the drawn value") {
        const std::vector<Point> targets{{10, 0}, {3, 3}, {0, 0}};
        const auto ext = extend_gaussian_field(support, values, targets, 5.0, 20.0, 8);
        CHECK(ext[0] == values[1]);
        CHECK(ext[2] == values[0]);
    }
    SECTION("conditional draws next to a support point stay close to it") {
        const std::vector<Point> targets{{0.01, 0}};
        double worst = 0.0;
        for (std::uint64_t s = 0; s < 200; ++s) {
            const auto ext = extend_gaussian_field(support, values, targets, 5.0, 20.0, s);
            worst = std::max(worst, std::abs(ext[0] - values[0]));
        }
        // Conditional std is about 5 * sqrt(2 * 0.01 / 20) ~ 0.16 dB.
        CHECK(worst < 1.0);
    }
}

TEST_CASE("Ground truth construction") {
    LocationSet locs;
    locs.points = {{10, 0}, {0, 10}, {-10, 0}, {20, 20}};
    const LinkBudget b;
    const PathlossParams pl;
    SECTION("without fields the mean SNR depends only on distance") {
        FieldParams f;
        f.shadow_std_db = 0.0;
        f.kfactor_std_db = 0.0;
        const GroundTruth t = build_ground_truth(locs, b, pl, f, 3);
        CHECK(t.mean_snr_db[0] == t.mean_snr_db[1]);
        CHECK(t.mean_snr_db[0] == t.mean_snr_db[2]);
        CHECK_THAT(t.mean_snr_db[3], WithinAbs(b.tx_power_dbm + pathloss_db(locs[3], b, pl) - b.noise_power_dbm, 1e-12));
        CHECK(t.kfactor_db[3] == f.kfactor_mean_db);
    }
    SECTION("a joint draw over train and test agrees at shared coordinates") {
        LocationSet joint = locs;
        joint.points.push_back(locs[1]);
        const GroundTruth t = build_ground_truth(joint, b, pl, {}, 11);
        CHECK(t.mean_snr_db[1] == t.mean_snr_db[4]);
        CHECK(t.kfactor_db[1] == t.kfactor_db[4]);
        const GroundTruth sub = ground_truth_at(t, locs, 12);
        for (std::size_t i = 0; i < locs.size(); ++i) CHECK(sub.mean_snr_db[i] == t.mean_snr_db[i]);
    }
    SECTION("shadowing is zero mean across seeds") {
        LocationSet one;
        one.points = {{15, -5}};
        const double deterministic = b.tx_power_dbm + pathloss_db(one[0], b, pl) - b.noise_power_dbm;
        double sum = 0.0;
        for (std::uint64_t s = 0; s < 4000; ++s) sum += build_ground_truth(one, b, pl, {}, s).mean_snr_db[0];
        // 6 dB shadowing: standard error 0.095 dB.
        CHECK_THAT(sum / 4000.0, WithinAbs(deterministic, 0.4));
    }
}

TEST_CASE("SNR sample generation") {
    SECTION("huge K-factor removes fading") {
        const SnrDataset d = draw_snr_samples(single(20.0, 200.0), 1000, 1);
        for (double w : d.samples) CHECK(std::abs(w / 100.0 - 1.0) <= 1e-3);
    }
    SECTION("K = 0 gives unit-mean exponential power") {
        const SnrDataset d = draw_snr_samples(single(0.0, -400.0), 100000, 2);
        const double mean = std::accumulate(d.samples.begin(), d.samples.end(), 0.0) / 1e5;
        CHECK(std::abs(mean - 1.0) <= 0.02);
        // Exponential: P(W <= ln 2) = 1/2.
        const auto below = std::count_if(d.samples.begin(), d.samples.end(), [](double w) { return w <= std::log(2.0); });
        CHECK(std::abs(static_cast<double>(below) / 1e5 - 0.5) <= 0.01);
    }
    SECTION("one sample per location") {
        LocationSet locs;
        locs.points = {{1, 1}, {2, 2}, {3, 3}};
        const SnrDataset d = draw_snr_samples(build_ground_truth(locs, {}, {}, {}, 5), 1, 6);
        REQUIRE(d.samples.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(d.row(i).size() == 1);
            CHECK(d.row(i)[0] > 0.0);
        }
    }
    SECTION("zero samples is rejected") {
        CHECK_THROWS_AS(draw_snr_samples(single(0, 0), 0, 1), InvalidArgument);
    }
    SECTION("Rician gain formula") {
        CHECK(rician_power_gain(0.0, 1.0, 1.0) == Catch::Approx(1.0));
        CHECK(rician_power_gain(1e12, 0.0, 0.0) == Catch::Approx(1.0));
    }
}
