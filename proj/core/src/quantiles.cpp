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

#include "radiomap/quantiles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radiomap/errors.hpp"
#include "radiomap/parallel.hpp"

namespace radiomap {

std::size_t order_statistic_rank(std::size_t n_samples, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
    // The relative nudge absorbs representation error, e.g. 1e5 * 1e-3.
    const double product = static_cast<double>(n_samples) * epsilon;
    return static_cast<std::size_t>(std::floor(product * (1.0 + 1e-12)));
}

double order_statistic(std::span<const double> values, std::size_t rank) {
    if (rank < 1 || rank > values.size()) {
        throw InsufficientSamples("order statistic rank " + std::to_string(rank) +
                                  " out of range for " + std::to_string(values.size()) +
                                  " samples");
    }
    std::vector<double> scratch(values.begin(), values.end());
    auto nth = scratch.begin() + static_cast<std::ptrdiff_t>(rank - 1);
    std::nth_element(scratch.begin(), nth, scratch.end());
    return *nth;
}

double estimate_log_quantile(std::span<const double> samples, double epsilon) {
    const std::size_t rank = order_statistic_rank(samples.size(), epsilon);
    if (rank < 1) {
        throw InsufficientSamples("floor(N * eps) < 1 with N = " + std::to_string(samples.size()) +
                                  "; need N >= 1 / eps");
    }
    for (double w : samples) {
        if (!(w > 0.0)) throw DomainError("SNR samples must be strictly positive");
    }
    // ln is monotone, so the r-th smallest log equals ln of the r-th smallest value.
    return std::log(order_statistic(samples, rank));
}

QuantileDataset standardize_quantiles(LocationSet locations, std::vector<double> q_hat,
                                      double epsilon, std::size_t rank) {
    const std::size_t d = q_hat.size();
    if (d < 2) {
        throw DegenerateVariance("need at least two locations to standardize quantiles, got " +
                                 std::to_string(d));
    }
    double mean = 0.0;
    for (double q : q_hat) mean += q;
    mean /= static_cast<double>(d);
    double ss = 0.0;
    for (double q : q_hat) ss += (q - mean) * (q - mean);
    const double s = std::sqrt(ss / static_cast<double>(d));
    if (!(s > 1e-12 * std::max(1.0, std::abs(mean)))) {
        throw DegenerateVariance("all log-quantile estimates coincide (s = " + std::to_string(s) +
                                 ")");
    }

    QuantileDataset out;
    out.locations = std::move(locations);
    out.epsilon = epsilon;
    out.rank = rank;
    out.q_bar = mean;
    out.s = s;
    out.rho_hat.resize(d);
    for (std::size_t i = 0; i < d; ++i) out.rho_hat[i] = (q_hat[i] - mean) / s;
    out.q_hat = std::move(q_hat);
    return out;
}

QuantileDataset build_quantile_dataset(const SnrDataset& data, double epsilon,
                                       unsigned threads) {
    const std::size_t rank = order_statistic_rank(data.n_samples, epsilon);
    if (rank < 1) {
        throw InsufficientSamples("floor(N * eps) < 1 with N = " + std::to_string(data.n_samples));
    }
    std::vector<double> q_hat(data.size());
    parallel_for(data.size(), threads,
                 [&](std::size_t d) { q_hat[d] = estimate_log_quantile(data.row(d), epsilon); });
    return standardize_quantiles(data.locations, std::move(q_hat), epsilon, rank);
}

}  // namespace radiomap
