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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "radiomap/channel.hpp"
#include "radiomap/evaluation.hpp"
#include "radiomap/geometry.hpp"
#include "radiomap/gp.hpp"
#include "radiomap/quantiles.hpp"

namespace radiomap {

// ---------------------------------------------------------------------------
// Map construction and rate selection for one dataset.

struct RadioMapResult {
    QuantileDataset quantiles;
    FitResult fit;
    PredictiveMap map;
    /// One predictive rate map per requested delta, in request order.
    std::vector<RateMap> predictive;
};

/// Quantile estimation, hyperparameter fit, grid prediction and predictive
/// rate selection for each delta.
RadioMapResult build_radio_map(const SnrDataset& train, const LocationSet& grid, double epsilon,
                               std::span<const double> deltas, const FitSettings& fit,
                               unsigned threads = 1);

RateMap baseline_rates(const SnrDataset& train, const LocationSet& grid, double epsilon);

// ---------------------------------------------------------------------------
// Meta-probability campaign over resampled training locations.

enum class SamplingProcess { thomas, binomial };

const char* to_string(SamplingProcess p) noexcept;
SamplingProcess sampling_process_from_string(const std::string& name);

struct SamplingConfig {
    SamplingProcess process = SamplingProcess::thomas;
    ThomasParams thomas;  // target_count is overridden by `count`
    std::size_t count = 100;
};

struct CampaignConfig {
    Region region;
    SamplingConfig sampling;
    LinkBudget budget;
    PathlossParams pathloss;
    FieldParams fields;
    double epsilon = 1e-2;
    std::size_t n_samples = 10000;   // training samples per location
    std::vector<double> deltas{1e-2};
    FitSettings fit;
    std::size_t realizations = 200;
    std::size_t n_test = 10000;
    double grid_spacing = 5.0;
    std::uint64_t master_seed = 1;
    unsigned threads = 1;

    void validate() const;
};

/// Environment held fixed across realizations: one ground-truth draw, the test
/// grid and its test samples.
struct Scenario {
    LocationSet grid;
    GroundTruth truth;               // on the support (grid plus sampling lattice)
    SnrDataset test;
    SortedTestData sorted_test;
    std::vector<double> true_quantile_linear;  // order statistic of the test samples
    std::vector<double> outage_capacity;       // log2(1 + true quantile)
};

Scenario prepare_scenario(const CampaignConfig& config);

/// Locations at which the Thomas sampler can place points: all multiples of
/// the grid spacing inside the region.
LocationSet sampling_lattice(const Region& region, double spacing);

struct RealizationResult {
    std::size_t index = 0;
    LocationSet train_locations;
    GpHyperparams hyperparams;
    /// Per method (predictive deltas in order, then baseline): rate and p_out per grid point.
    std::vector<std::vector<double>> rates;
    std::vector<std::vector<double>> p_out;
};

/// Seeds of realization m, derived from the master seed by index.
struct RealizationSeeds {
    std::uint64_t locations;
    std::uint64_t field_extension;
    std::uint64_t snr;
    std::uint64_t fit;
};
RealizationSeeds realization_seeds(std::uint64_t master_seed, std::size_t m) noexcept;

/// Draws training locations for realization m.
LocationSet sample_training_locations(const CampaignConfig& config, std::uint64_t seed);

/// Runs one realization end to end. Errors are rethrown as RealizationError.
RealizationResult run_realization(const Scenario& scenario, const CampaignConfig& config,
                                  std::size_t m);

struct MetaReport {
    LocationSet grid;
    std::string label;
    RateMethod method = RateMethod::predictive;
    double delta = 0.0;
    std::size_t realizations = 0;
    std::vector<std::size_t> exceed_count;
    std::vector<double> meta_prob;
};

struct MethodPairs {
    std::string label;
    /// Realization-major (m * L + l).
    std::vector<double> p_out;
    std::vector<double> norm_throughput;
};

struct CampaignResult {
    std::vector<MetaReport> reports;   // predictive deltas in order, then baseline
    std::vector<MethodPairs> pairs;    // same order as reports
    std::vector<GpHyperparams> fitted; // per realization
    double realizations_seconds = 0.0;
};

/// Meta-probability reports from per-realization results, in the order given.
/// Throws GridMismatch if a result does not cover every method and grid point.
CampaignResult aggregate_realizations(const Scenario& scenario, const CampaignConfig& config,
                                      std::span<const RealizationResult> results);

/// Monte-Carlo estimate of the meta-probability P(p_out > eps) per grid point.
CampaignResult estimate_meta_probability(const Scenario& scenario, const CampaignConfig& config);

}  // namespace radiomap
