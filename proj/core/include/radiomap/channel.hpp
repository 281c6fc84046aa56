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

namespace radiomap {

struct LinkBudget {
    double tx_power_dbm = 0.0;
    double noise_power_dbm = -115.0;  // B * N0
    double bandwidth_hz = 200e3;
    double carrier_hz = 2.6e9;        // informational
    Point bs_position{0.0, 0.0};
    double bs_height_m = 10.0;
    double ue_height_m = 1.5;

    void validate() const;
};

/// Log-distance pathloss K - 10 eta log10(d / d0).
struct PathlossParams {
    double k_db = -48.0;  // gives ~40 dB mean SNR at 10 m with the default budget
    double eta = 2.7;
    double d0_m = 1.0;

    void validate() const;
};

/// Spatially correlated large-scale fields: lognormal shadowing and the
/// Rician K-factor, both with exponential (Gudmundson) covariance.
struct FieldParams {
    double shadow_std_db = 6.0;
    double shadow_corr_dist_m = 20.0;
    double kfactor_mean_db = 6.0;
    double kfactor_std_db = 4.0;
    double kfactor_corr_dist_m = 30.0;

    void validate() const;
};

/// One frozen realization of the large-scale channel at a set of locations.
struct GroundTruth {
    LocationSet locations;
    std::vector<double> mean_snr_db;
    std::vector<double> kfactor_db;
    /// Zero-mean field draws; mean_snr_db = deterministic part + shadowing_db.
    std::vector<double> shadowing_db;
    std::vector<double> kfactor_dev_db;

    LinkBudget budget;
    PathlossParams pathloss;
    FieldParams fields;
    std::uint64_t seed = 0;

    std::size_t size() const noexcept { return locations.size(); }
};

/// Per-location i.i.d. linear SNR samples, row-major (one row per location).
struct SnrDataset {
    LocationSet locations;
    std::size_t n_samples = 0;
    std::vector<double> samples;

    std::size_t size() const noexcept { return locations.size(); }
    std::span<const double> row(std::size_t d) const {
        return {samples.data() + d * n_samples, n_samples};
    }
    std::span<double> row(std::size_t d) { return {samples.data() + d * n_samples, n_samples}; }
};

/// Pathloss gain in dB at horizontal position `x`. Uses the 3-D distance to
/// the base station, clamped to at least d0.
double pathloss_db(const Point& x, const LinkBudget& budget, const PathlossParams& pl);

/// One joint draw of a zero-mean Gaussian field with covariance
/// std^2 exp(-|s - s'| / corr_dist). Coincident points receive the same value.
/// Throws FactorizationFailure if the diagonal jitter schedule is exhausted.
std::vector<double> sample_gaussian_field(std::span<const Point> points, double std_db,
                                          double corr_dist, std::uint64_t seed);

/// Draws the field at `targets` conditioned on already-drawn `values` at
/// `support`. Targets that coincide with a support point take its value.
std::vector<double> extend_gaussian_field(std::span<const Point> support,
                                          std::span<const double> values,
                                          std::span<const Point> targets, double std_db,
                                          double corr_dist, std::uint64_t seed);

/// Samples shadowing and K-factor fields jointly over all `locations`.
/// Pass train and test locations together to keep them spatially consistent.
GroundTruth build_ground_truth(const LocationSet& locations, const LinkBudget& budget,
                               const PathlossParams& pl, const FieldParams& fields,
                               std::uint64_t seed);

/// Ground truth at `targets`, consistent with `truth`: coordinates present in
/// `truth` are copied bit-exactly, others are drawn conditionally.
GroundTruth ground_truth_at(const GroundTruth& truth, const LocationSet& targets,
                            std::uint64_t seed);

/// Normalized Rician power gain with unit mean for linear K-factor `kappa`.
double rician_power_gain(double kappa, double g_real, double g_imag) noexcept;

/// `n_samples` i.i.d. SNR draws per location: mean linear SNR times Rician
/// power fading. Each location uses its own seed stream.
SnrDataset draw_snr_samples(const GroundTruth& truth, std::size_t n_samples,
                            std::uint64_t seed, unsigned threads = 1);

}  // namespace radiomap
