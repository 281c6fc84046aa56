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

#include "radiomap/campaign.hpp"

#include <chrono>
#include <cmath>
#include <map>

#include "radiomap/errors.hpp"
#include "radiomap/parallel.hpp"
#include "radiomap/random.hpp"
#include "radiomap/rate.hpp"

namespace radiomap {

RadioMapResult build_radio_map(const SnrDataset& train, const LocationSet& grid, double epsilon,
                               std::span<const double> deltas, const FitSettings& fit,
                               unsigned threads) {
    RadioMapResult out;
    out.quantiles = build_quantile_dataset(train, epsilon, threads);
    out.fit = fit_hyperparameters(out.quantiles, fit);
    out.map = predict(out.quantiles, grid, out.fit.hyperparams, {.threads = threads});
    out.predictive.reserve(deltas.size());
    for (double delta : deltas) {
        RateMap r;
        r.grid = grid;
        r.method = RateMethod::predictive;
        r.epsilon = epsilon;
        r.delta = delta;
        r.rates = predictive_rate_map(out.map, delta);
        out.predictive.push_back(std::move(r));
    }
    return out;
}

RateMap baseline_rates(const SnrDataset& train, const LocationSet& grid, double epsilon) {
    RateMap r;
    r.grid = grid;
    r.method = RateMethod::baseline;
    r.epsilon = epsilon;
    r.rates = baseline_rate_map(train, grid, epsilon);
    return r;
}

const char* to_string(SamplingProcess p) noexcept {
    return p == SamplingProcess::thomas ? "thomas" : "binomial";
}

SamplingProcess sampling_process_from_string(const std::string& name) {
    if (name == "thomas") return SamplingProcess::thomas;
    if (name == "binomial") return SamplingProcess::binomial;
    throw ConfigError("unknown sampling process '" + name + "' (expected thomas or binomial)");
}

void CampaignConfig::validate() const {
    region.validate();
    budget.validate();
    pathloss.validate();
    fields.validate();
    fit.bounds.validate();
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
    if (deltas.empty()) throw ConfigError("at least one delta is required");
    for (double d : deltas) {
        if (!(d > 0.0 && d < 1.0)) throw ConfigError("every delta must lie in (0, 1)");
    }
    if (order_statistic_rank(n_samples, epsilon) < 1) {
        throw ConfigError("training samples per location must satisfy N * eps >= 1");
    }
    if (order_statistic_rank(n_test, epsilon) < 1) {
        throw ConfigError("test samples per location must satisfy N_test * eps >= 1");
    }
    if (realizations < 1) throw ConfigError("realizations must be >= 1");
    if (sampling.count < 1) throw ConfigError("sampling count must be >= 1");
    if (sampling.process == SamplingProcess::thomas) {
        ThomasParams p = sampling.thomas;
        p.target_count = sampling.count;
        p.validate();
    }
}

LocationSet sampling_lattice(const Region& region, double spacing) {
    region.validate();
    if (!(spacing > 0.0)) throw InvalidArgument("lattice spacing must be positive");
    // Same construction as the Thomas sampler: k * spacing for integer k.
    const auto kx0 = static_cast<long long>(std::ceil(region.x_min / spacing));
    const auto kx1 = static_cast<long long>(std::floor(region.x_max / spacing));
    const auto ky0 = static_cast<long long>(std::ceil(region.y_min / spacing));
    const auto ky1 = static_cast<long long>(std::floor(region.y_max / spacing));
    LocationSet out;
    out.region = region;
    for (long long ky = ky0; ky <= ky1; ++ky) {
        for (long long kx = kx0; kx <= kx1; ++kx) {
            const Point p{static_cast<double>(kx) * spacing, static_cast<double>(ky) * spacing};
            if (region.contains(p)) out.points.push_back(p);
        }
    }
    return out;
}

namespace {

LocationSet union_of(const LocationSet& a, const LocationSet& b) {
    LocationSet out = a;
    auto less = [](const Point& p, const Point& q) { return p.y < q.y || (p.y == q.y && p.x < q.x); };
    std::map<Point, bool, decltype(less)> seen(less);
    for (const Point& p : a.points) seen.emplace(p, true);
    for (const Point& p : b.points) {
        if (seen.emplace(p, true).second) out.points.push_back(p);
    }
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Scenario prepare_scenario(const CampaignConfig& config) {
    config.validate();
    LocationSet grid = uniform_grid(config.region, config.grid_spacing);
    // Thomas samples land on a known lattice, so the field can be drawn there
    // once. Binomial samples are handled by conditional extension per realization.
    LocationSet support = grid;
    if (config.sampling.process == SamplingProcess::thomas) {
        support = union_of(grid, sampling_lattice(config.region, config.sampling.thomas.grid_spacing));
    }
    GroundTruth truth = build_ground_truth(support, config.budget, config.pathloss, config.fields,
                                           derive_seed(config.master_seed, "scenario.truth"));
    const GroundTruth grid_truth =
        ground_truth_at(truth, grid, derive_seed(config.master_seed, "scenario.grid"));
    SnrDataset test = draw_snr_samples(grid_truth, config.n_test,
                                       derive_seed(config.master_seed, "scenario.test"),
                                       config.threads);
    SortedTestData sorted(test, config.threads);

    const std::size_t rank = order_statistic_rank(config.n_test, config.epsilon);
    std::vector<double> quantile(grid.size());
    std::vector<double> capacity(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        quantile[i] = sorted.order_statistic(i, rank);
        capacity[i] = outage_capacity(quantile[i]);
    }
    return Scenario{std::move(grid),     std::move(truth),    std::move(test),
                    std::move(sorted),   std::move(quantile), std::move(capacity)};
}

RealizationSeeds realization_seeds(std::uint64_t master_seed, std::size_t m) noexcept {
    return {derive_seed(master_seed, "realization.locations", m),
            derive_seed(master_seed, "realization.field", m),
            derive_seed(master_seed, "realization.snr", m),
            derive_seed(master_seed, "realization.fit", m)};
}

LocationSet sample_training_locations(const CampaignConfig& config, std::uint64_t seed) {
    if (config.sampling.process == SamplingProcess::thomas) {
        ThomasParams p = config.sampling.thomas;
        p.target_count = config.sampling.count;
        return sample_thomas(p, config.region, seed);
    }
    return sample_binomial(config.sampling.count, config.region, seed);
}

RealizationResult run_realization(const Scenario& scenario, const CampaignConfig& config,
                                  std::size_t m) {
    try {
        const RealizationSeeds seeds = realization_seeds(config.master_seed, m);
        RealizationResult out;
        out.index = m;
        out.train_locations = sample_training_locations(config, seeds.locations);
        const GroundTruth train_truth =
            ground_truth_at(scenario.truth, out.train_locations, seeds.field_extension);
        const SnrDataset train = draw_snr_samples(train_truth, config.n_samples, seeds.snr);

        FitSettings fit = config.fit;
        fit.seed = seeds.fit;
        RadioMapResult radio = build_radio_map(train, scenario.grid, config.epsilon, config.deltas, fit);
        out.hyperparams = radio.fit.hyperparams;

        for (RateMap& r : radio.predictive) out.rates.push_back(std::move(r.rates));
        out.rates.push_back(baseline_rate_map(train, scenario.grid, config.epsilon));
        for (const auto& rates : out.rates) {
            std::vector<double> p(rates.size());
            for (std::size_t i = 0; i < rates.size(); ++i) p[i] = scenario.sorted_test.outage(i, rates[i]);
            out.p_out.push_back(std::move(p));
        }
        return out;
    } catch (const Error& e) {
        throw RealizationError(m, e);
    }
}

CampaignResult aggregate_realizations(const Scenario& scenario, const CampaignConfig& config,
                                      std::span<const RealizationResult> results) {
    const std::size_t n_methods = config.deltas.size() + 1;
    const std::size_t n_grid = scenario.grid.size();
    const std::size_t n_real = results.size();
    if (n_real < 1) throw InvalidArgument("at least one realization is required");
    for (const RealizationResult& r : results) {
        if (r.rates.size() != n_methods || r.p_out.size() != n_methods) {
            throw GridMismatch("realization result does not match the configured methods");
        }
        for (std::size_t k = 0; k < n_methods; ++k) {
            if (r.rates[k].size() != n_grid || r.p_out[k].size() != n_grid) {
                throw GridMismatch("realization result does not match the scenario grid");
            }
        }
    }

    CampaignResult out;
    for (std::size_t k = 0; k < n_methods; ++k) {
        const bool baseline = k + 1 == n_methods;
        MetaReport report;
        report.grid = scenario.grid;
        report.method = baseline ? RateMethod::baseline : RateMethod::predictive;
        report.delta = baseline ? 0.0 : config.deltas[k];
        report.realizations = n_real;
        report.exceed_count.assign(n_grid, 0);
        RateMap labeler;
        labeler.method = report.method;
        labeler.delta = report.delta;
        report.label = labeler.label();

        MethodPairs pairs;
        pairs.label = report.label;
        pairs.p_out.reserve(n_real * n_grid);
        pairs.norm_throughput.reserve(n_real * n_grid);
        // Accumulate in realization order so the result is thread-count independent.
        for (const RealizationResult& r : results) {
            for (std::size_t l = 0; l < n_grid; ++l) {
                const double p = r.p_out[k][l];
                if (p > config.epsilon) ++report.exceed_count[l];
                pairs.p_out.push_back(p);
                pairs.norm_throughput.push_back(normalized_throughput(
                    r.rates[k][l], p, scenario.true_quantile_linear[l], config.epsilon));
            }
        }
        report.meta_prob.resize(n_grid);
        for (std::size_t l = 0; l < n_grid; ++l) {
            report.meta_prob[l] =
                static_cast<double>(report.exceed_count[l]) / static_cast<double>(n_real);
        }
        out.reports.push_back(std::move(report));
        out.pairs.push_back(std::move(pairs));
    }
    for (const RealizationResult& r : results) out.fitted.push_back(r.hyperparams);
    return out;
}

CampaignResult estimate_meta_probability(const Scenario& scenario, const CampaignConfig& config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<RealizationResult> results(config.realizations);
    // Each realization is single-threaded; parallelism is across realizations.
    parallel_for(config.realizations, config.threads,
                 [&](std::size_t m) { results[m] = run_realization(scenario, config, m); });
    CampaignResult out = aggregate_realizations(scenario, config, results);
    out.realizations_seconds = seconds_since(t0);
    return out;
}

}  // namespace radiomap
