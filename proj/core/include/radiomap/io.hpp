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

#include <filesystem>
#include <string>
#include <vector>

#include "radiomap/channel.hpp"
#include "radiomap/evaluation.hpp"
#include "radiomap/geometry.hpp"
#include "radiomap/gp.hpp"
#include "radiomap/quantiles.hpp"

namespace radiomap::io {

namespace fs = std::filesystem;

/// "%.17g": round-trips every double.
std::string format_double(double v);

// Location sets: `index,x_m,y_m`, 6 decimal places, row order preserved.
void write_locations_csv(const fs::path& path, const LocationSet& set);
LocationSet read_locations_csv(const fs::path& path, const Region& region);

// SNR matrix: little-endian binary, one row per location.
//   magic "RMSNRv1\0" | u64 rows | u64 cols | rows*cols f64
void write_snr_matrix(const fs::path& path, const SnrDataset& data);
/// Reads the matrix and attaches `locations`; throws FormatError on a row-count mismatch.
SnrDataset read_snr_matrix(const fs::path& path, LocationSet locations);

// `index,x_m,y_m,mean_snr_db,kfactor_db`
void write_ground_truth_csv(const fs::path& path, const GroundTruth& truth);

// `index,x_m,y_m,q_hat_log,rho_hat` + sidecar {epsilon, rank, q_bar, s}
void write_quantiles(const fs::path& csv, const fs::path& json, const QuantileDataset& qd);
QuantileDataset read_quantiles(const fs::path& csv, const fs::path& json, const Region& region);

// `index,x_m,y_m,mean_rho,var_rho` + sidecar {signal_var, corr_dist_m, noise_var, q_bar, s}
void write_predictive_map(const fs::path& csv, const fs::path& json, const PredictiveMap& map);
PredictiveMap read_predictive_map(const fs::path& csv, const fs::path& json, const Region& region);

/// Predictive and baseline rates for one (epsilon, delta) pair.
struct RatePair {
    LocationSet grid;
    std::vector<double> predictive;
    std::vector<double> baseline;
    double epsilon = 0.0;
    double delta = 0.0;
};

// `index,x_m,y_m,rate_predictive,rate_baseline` + sidecar {epsilon, delta}
void write_rate_pair(const fs::path& csv, const fs::path& json, const RatePair& rates);
RatePair read_rate_pair(const fs::path& csv, const fs::path& json, const Region& region);

/// Grid-keyed table `index,x_m,y_m,<names...>`; used for outage, meta-probability
/// and throughput reports.
void write_grid_table(const fs::path& path, const LocationSet& grid,
                      const std::vector<std::string>& names,
                      const std::vector<std::vector<double>>& columns);

// `value,cum_prob`
void write_cdf_csv(const fs::path& path, const EmpiricalCdf& cdf);

// Plain CSV helpers shared by the readers above.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};
CsvTable read_numeric_csv(const fs::path& path);

void write_text(const fs::path& path, const std::string& text);
std::string read_text(const fs::path& path);

}  // namespace radiomap::io
