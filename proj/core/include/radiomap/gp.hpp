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
#include "radiomap/quantiles.hpp"

namespace radiomap {

/// Hyperparameters of the zero-mean GP with absolute-exponential
/// (Gudmundson) covariance plus i.i.d. observation noise.
struct GpHyperparams {
    double signal_var = 1.0;  // sigma_k^2
    double corr_dist = 20.0;  // d_c, meters
    double noise_var = 0.01;  // sigma_xi^2

    void validate() const;

    friend bool operator==(const GpHyperparams&, const GpHyperparams&) = default;
};

/// signal_var * exp(-|a - b| / corr_dist)
double kernel(const Point& a, const Point& b, const GpHyperparams& hp) noexcept;

/// Diagonal jitter tried in order when factorizing the training Gram matrix.
/// The first entry is zero so well-conditioned problems are solved unmodified.
inline constexpr double kGpJitterSchedule[] = {0.0, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6};

/// Marginal predictive distribution of the standardized quantile on a grid.
struct PredictiveMap {
    LocationSet grid;
    std::vector<double> mean;  // mu_rho
    std::vector<double> var;   // sigma_rho^2, clamped to [0, signal_var]
    GpHyperparams hyperparams;
    double q_bar = 0.0;
    double s = 1.0;
    double jitter = 0.0;       // diagonal jitter that made the factorization succeed

    std::size_t size() const noexcept { return mean.size(); }
};

struct PredictOptions {
    std::size_t block_size = 1024;
    unsigned threads = 1;
};

/// Exact predictive mean and variance at `grid` given noisy observations
/// `rho` at `train`. Norm stats in the result are left at (0, 1).
/// Throws FactorizationFailure if the jitter schedule is exhausted.
PredictiveMap predict(const LocationSet& train, std::span<const double> rho,
                      const LocationSet& grid, const GpHyperparams& hp,
                      const PredictOptions& options = {});

/// Same as above, carrying (q_bar, s) from the quantile dataset.
PredictiveMap predict(const QuantileDataset& qd, const LocationSet& grid,
                      const GpHyperparams& hp, const PredictOptions& options = {});

/// log N(rho | 0, K + noise_var I), computed from a Cholesky factor.
double log_marginal_likelihood(const LocationSet& train, std::span<const double> rho,
                               const GpHyperparams& hp);
double log_marginal_likelihood(const QuantileDataset& qd, const GpHyperparams& hp);

struct FitBounds {
    double signal_var_min = 1e-4;
    double signal_var_max = 1e2;
    double corr_dist_min = 0.5;
    double corr_dist_max = 500.0;
    double noise_var_min = 1e-6;
    double noise_var_max = 10.0;

    void validate() const;
};

struct FitSettings {
    FitBounds bounds;
    std::size_t n_starts = 5;
    std::size_t max_iterations = 500;
    double f_tolerance = 1e-6;
    std::uint64_t seed = 0;
};

struct FitStart {
    GpHyperparams initial;
    double initial_log_likelihood = 0.0;
    GpHyperparams final;
    double final_log_likelihood = 0.0;
    std::size_t iterations = 0;
};

struct FitResult {
    GpHyperparams hyperparams;
    double log_likelihood = 0.0;
    std::vector<FitStart> starts;
    std::size_t evaluations = 0;
};

/// Maximum-likelihood hyperparameters: Nelder-Mead in log-parameter space
/// from `n_starts` log-uniform starting points inside the bounds. The result
/// is the best point evaluated across all starts, so its likelihood is never
/// below any start's. Throws FitDiverged if no evaluation is finite.
FitResult fit_hyperparameters(const LocationSet& train, std::span<const double> rho,
                              const FitSettings& settings = {});
FitResult fit_hyperparameters(const QuantileDataset& qd, const FitSettings& settings = {});

}  // namespace radiomap
