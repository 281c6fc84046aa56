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
#include <vector>

#include "radiomap/channel.hpp"
#include "radiomap/geometry.hpp"
#include "radiomap/gp.hpp"

namespace radiomap {

enum class RateMethod { predictive, baseline };

const char* to_string(RateMethod m) noexcept;

struct RateDecision {
    Point location;
    double rate_bps_hz = 0.0;
    RateMethod method = RateMethod::predictive;
    // Predictive rule only.
    double delta = 0.0;
    double mu_l = 0.0;     // denormalized log-quantile mean
    double sigma_l = 0.0;  // denormalized log-quantile std
};

/// log2(1 + exp(x)) without overflow for large x.
double log2_one_plus_exp(double x) noexcept;

/// Rate whose predicted log-quantile is exceeded with probability 1 - delta:
/// log2(1 + exp(mu + sqrt(2) sigma erf^-1(2 delta - 1))).
double predictive_rate(double mu_l, double sigma_l, double delta);

/// Denormalizes the map at `grid_index` and applies the predictive rule.
RateDecision select_rate_predictive(const PredictiveMap& map, std::size_t grid_index,
                                    double delta);

/// log2(1 + W_(r)) at the nearest observed location, r = floor(N eps).
/// Equidistant neighbours resolve to the lowest index.
RateDecision select_rate_baseline(const SnrDataset& data, const Point& x_star, double epsilon);

/// epsilon-outage capacity log2(1 + w_eps) for a linear SNR quantile.
double outage_capacity(double true_quantile_linear);

/// Predictive rates for every grid point of `map`.
std::vector<double> predictive_rate_map(const PredictiveMap& map, double delta);

/// Baseline rates at every point of `grid`. Order statistics are computed once
/// per observed location.
std::vector<double> baseline_rate_map(const SnrDataset& data, const LocationSet& grid,
                                      double epsilon);

}  // namespace radiomap
