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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "radiomap/channel.hpp"
#include "radiomap/geometry.hpp"
#include "radiomap/gp.hpp"
#include "radiomap/quantiles.hpp"
#include "radiomap/special_functions.hpp"

namespace {

using namespace radiomap;

struct GpFixture {
    LocationSet train;
    std::vector<double> rho;
    LocationSet grid;
};

GpFixture make_gp_fixture(std::size_t d) {
    GpFixture f;
    f.train = sample_binomial(d, Region{}, 11);
    f.rho = sample_gaussian_field(f.train.points, 1.0, 20.0, 12);
    std::mt19937_64 rng(13);
    std::normal_distribution<double> noise(0.0, 0.1);
    for (double& r : f.rho) r += noise(rng);
    f.grid = uniform_grid(Region{}, 5.0);
    return f;
}

void BM_Predict(benchmark::State& state) {
    const GpFixture f = make_gp_fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(predict(f.train, f.rho, f.grid, GpHyperparams{}));
    }
}
BENCHMARK(BM_Predict)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_LogMarginalLikelihood(benchmark::State& state) {
    const GpFixture f = make_gp_fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_marginal_likelihood(f.train, f.rho, GpHyperparams{}));
    }
}
BENCHMARK(BM_LogMarginalLikelihood)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_FitHyperparameters(benchmark::State& state) {
    const GpFixture f = make_gp_fixture(static_cast<std::size_t>(state.range(0)));
    FitSettings settings;
    settings.seed = 5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_hyperparameters(f.train, f.rho, settings));
    }
}
BENCHMARK(BM_FitHyperparameters)->Arg(100)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_LogQuantile(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> samples(static_cast<std::size_t>(state.range(0)));
    for (double& s : samples) s = exp1(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_log_quantile(samples, 1e-3));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LogQuantile)->Arg(10000)->Arg(100000);

void BM_DrawSnrSamples(benchmark::State& state) {
    const LocationSet locs = sample_binomial(100, Region{}, 21);
    const GroundTruth truth = build_ground_truth(locs, {}, {}, {}, 22);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(draw_snr_samples(truth, n, 23));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * 100);
}
BENCHMARK(BM_DrawSnrSamples)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_InverseErf(benchmark::State& state) {
    double p = -0.999;
    for (auto _ : state) {
        benchmark::DoNotOptimize(inverse_erf(p));
        p += 1e-6;
        if (p > 0.999) p = -0.999;
    }
}
BENCHMARK(BM_InverseErf);

}  // namespace
BENCHMARK_MAIN();
