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
#include <vector>

#include "radiomap/geometry.hpp"
#include "radiomap/gp.hpp"

namespace radiomap::testing {

/// GP posterior computed with an explicit matrix inverse and an LU
/// determinant. Slow, but shares no code with the Cholesky path.
struct DenseGpOracle {
    std::vector<double> mean;
    std::vector<double> var;
    double log_marginal_likelihood = 0.0;
};

DenseGpOracle dense_gp_oracle(std::span<const Point> train, std::span<const double> rho,
                              std::span<const Point> grid, const GpHyperparams& hp);

/// erf by its Maclaurin series in long double. Good to ~1e-15 for |x| <= 4.
double erf_series(double x);

/// Standard normal quantile by bisection on 0.5 erfc(-x / sqrt 2).
double normal_quantile_bisection(double p);

/// Index of the closest point; ties go to the lowest index.
std::size_t brute_force_nearest(std::span<const Point> points, const Point& target);

/// r-th smallest (1-indexed) by full sort.
double sorted_order_statistic(std::vector<double> values, std::size_t rank);

/// Mean raw daughter count of a Thomas process, simulated directly from the
/// definition: Poisson parents on the padded window, Poisson children each.
double thomas_raw_count_oracle(const ThomasParams& params, const Region& region,
                               std::size_t seeds, std::uint64_t seed);

/// sup_x |F_n(x) - x| for samples in [0, 1].
double ks_distance_uniform(std::vector<double> samples);

/// One draw of rho ~ N(0, K + noise_var I) via a dense Cholesky factor.
std::vector<double> sample_gp_prior(const LocationSet& train, const GpHyperparams& hp,
                                    std::uint64_t seed);

/// Random instance for GP checks: `d` distinct points in [-50, 50]^2 at least
/// `min_sep` apart, observations drawn from the GP prior.
struct GpInstance {
    LocationSet train;
    std::vector<double> rho;
    LocationSet grid;
    GpHyperparams hp;
};
GpInstance random_gp_instance(std::size_t d, std::size_t grid_points, std::uint64_t seed,
                              double min_sep = 0.5);

}  // namespace radiomap::testing
