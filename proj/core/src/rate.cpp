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

#include "radiomap/rate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "radiomap/errors.hpp"
#include "radiomap/quantiles.hpp"
#include "radiomap/special_functions.hpp"

namespace radiomap {

const char* to_string(RateMethod m) noexcept {
    return m == RateMethod::predictive ? "predictive" : "baseline";
}

double log2_one_plus_exp(double x) noexcept {
    // log(1 + e^x) = x + log1p(e^-x) for large x.
    const double nat = x > 30.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
    return nat / std::numbers::ln2;
}

double predictive_rate(double mu_l, double sigma_l, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
    if (!(sigma_l >= 0.0)) throw InvalidArgument("sigma_l must be >= 0");
    const double shift = std::numbers::sqrt2 * sigma_l * inverse_erf(2.0 * delta - 1.0);
    return log2_one_plus_exp(mu_l + shift);
}

RateDecision select_rate_predictive(const PredictiveMap& map, std::size_t grid_index,
                                    double delta) {
    if (grid_index >= map.size()) throw InvalidArgument("grid index out of range");
    RateDecision d;
    d.location = map.grid[grid_index];
    d.method = RateMethod::predictive;
    d.delta = delta;
    d.mu_l = map.s * map.mean[grid_index] + map.q_bar;
    d.sigma_l = map.s * std::sqrt(map.var[grid_index]);
    d.rate_bps_hz = predictive_rate(d.mu_l, d.sigma_l, delta);
    return d;
}

RateDecision select_rate_baseline(const SnrDataset& data, const Point& x_star, double epsilon) {
    if (data.size() == 0) throw InvalidArgument("baseline rate needs a nonempty dataset");
    const std::size_t rank = order_statistic_rank(data.n_samples, epsilon);
    if (rank < 1) {
        throw InsufficientSamples("floor(N * eps) < 1 with N = " + std::to_string(data.n_samples));
    }
    const std::size_t nearest = nearest_index(data.locations, x_star);
    RateDecision d;
    d.location = x_star;
    d.method = RateMethod::baseline;
    d.rate_bps_hz = outage_capacity(order_statistic(data.row(nearest), rank));
    return d;
}

double outage_capacity(double true_quantile_linear) {
    if (!(true_quantile_linear > 0.0)) throw DomainError("SNR quantile must be positive");
    return std::log2(1.0 + true_quantile_linear);
}

std::vector<double> predictive_rate_map(const PredictiveMap& map, double delta) {
    std::vector<double> rates(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
        rates[i] = select_rate_predictive(map, i, delta).rate_bps_hz;
    }
    return rates;
}

std::vector<double> baseline_rate_map(const SnrDataset& data, const LocationSet& grid,
                                      double epsilon) {
    if (data.size() == 0) throw InvalidArgument("baseline rate needs a nonempty dataset");
    const std::size_t rank = order_statistic_rank(data.n_samples, epsilon);
    if (rank < 1) {
        throw InsufficientSamples("floor(N * eps) < 1 with N = " + std::to_string(data.n_samples));
    }
    std::vector<double> per_location(data.size());
    for (std::size_t d = 0; d < data.size(); ++d) {
        per_location[d] = outage_capacity(order_statistic(data.row(d), rank));
    }
    std::vector<double> rates(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rates[i] = per_location[nearest_index(data.locations, grid[i])];
    }
    return rates;
}

}  // namespace radiomap
