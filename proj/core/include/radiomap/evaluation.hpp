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
#include <span>
#include <string>
#include <vector>

#include "radiomap/channel.hpp"
#include "radiomap/geometry.hpp"
#include "radiomap/rate.hpp"

namespace radiomap {

/// Fraction of samples with log2(1 + W) < rate. Boundary equality is not an outage.
double empirical_outage(double rate, std::span<const double> test_samples);

/// Test samples sorted once per location so repeated outage queries cost
/// O(log N). Counts agree exactly with empirical_outage.
class SortedTestData {
public:
    explicit SortedTestData(const SnrDataset& test, unsigned threads = 1);

    const LocationSet& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return grid_.size(); }
    std::size_t n_samples() const noexcept { return n_samples_; }
    std::span<const double> sorted_row(std::size_t i) const {
        return {sorted_.data() + i * n_samples_, n_samples_};
    }

    double outage(std::size_t i, double rate) const;
    /// r-th smallest linear SNR at location i.
    double order_statistic(std::size_t i, std::size_t rank) const;

private:
    LocationSet grid_;
    std::size_t n_samples_ = 0;
    std::vector<double> sorted_;
};

/// Rates for every point of a grid from one selection rule.
struct RateMap {
    LocationSet grid;
    std::vector<double> rates;
    RateMethod method = RateMethod::predictive;
    double epsilon = 0.0;
    double delta = 0.0;  // predictive only

    std::string label() const;
};

struct OutageMap {
    LocationSet grid;
    std::vector<double> p_out;
    RateMethod rate_source = RateMethod::predictive;
    std::string label;
    double epsilon = 0.0;
    std::size_t n_test = 0;
};

/// Applies empirical_outage per grid point. Throws GridMismatch unless the
/// rate map and the test data share the same grid.
OutageMap evaluate_rate_map(const RateMap& rates, const SortedTestData& test);
std::vector<OutageMap> evaluate_rate_maps(std::span<const RateMap> rates, const SnrDataset& test);

/// R (1 - p_out) / (R_eps (1 - eps)); values above 1 violate the target.
/// Throws DegenerateCapacity when R_eps = 0.
double normalized_throughput(double rate, double p_out, double true_quantile_linear,
                             double epsilon);

struct ThroughputReport {
    LocationSet grid;
    std::string label;
    std::vector<double> norm_throughput;
    double epsilon = 0.0;
};

ThroughputReport throughput_report(const OutageMap& outage, const RateMap& rates,
                                   std::span<const double> true_quantile_linear);

/// Right-continuous step function: one entry per distinct value with the
/// fraction of samples <= value.
struct EmpiricalCdf {
    std::vector<double> values;
    std::vector<double> cum_prob;

    /// Fraction of samples <= x.
    double operator()(double x) const;
};

EmpiricalCdf empirical_cdf(std::span<const double> values);

/// Fraction of entries strictly greater than `threshold`.
double fraction_above(std::span<const double> values, double threshold);

}  // namespace radiomap
