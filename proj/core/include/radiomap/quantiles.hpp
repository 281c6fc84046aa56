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

namespace radiomap {

/// Per-location log-scale epsilon-quantile estimates and their
/// standardization rho = (q - q_bar) / s.
struct QuantileDataset {
    LocationSet locations;
    std::vector<double> q_hat;    // natural log of linear SNR
    std::vector<double> rho_hat;
    double epsilon = 0.0;
    std::size_t rank = 0;         // 1-indexed order statistic
    double q_bar = 0.0;
    double s = 0.0;               // population standard deviation of q_hat

    std::size_t size() const noexcept { return q_hat.size(); }
};

/// Order-statistic rank floor(N * eps); 0 means the quantile is undefined.
std::size_t order_statistic_rank(std::size_t n_samples, double epsilon);

/// r-th smallest element (1-indexed) of `values`. Does not modify the input.
double order_statistic(std::span<const double> values, std::size_t rank);

/// r-th smallest value of ln(samples) with r = floor(N eps).
/// Throws InsufficientSamples if r < 1 and DomainError for non-positive samples.
double estimate_log_quantile(std::span<const double> samples, double epsilon);

/// Log-quantile per location followed by global standardization.
/// Throws DegenerateVariance if D < 2 or all estimates coincide.
QuantileDataset build_quantile_dataset(const SnrDataset& data, double epsilon,
                                       unsigned threads = 1);

/// Standardizes precomputed log-quantiles; shared by build_quantile_dataset
/// and file loaders.
QuantileDataset standardize_quantiles(LocationSet locations, std::vector<double> q_hat,
                                      double epsilon, std::size_t rank);

}  // namespace radiomap
