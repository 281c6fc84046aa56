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

#include "radiomap/channel.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "radiomap/errors.hpp"
#include "radiomap/parallel.hpp"
#include "radiomap/random.hpp"

namespace radiomap {

void LinkBudget::validate() const {
    if (!(bandwidth_hz > 0.0)) throw InvalidArgument("bandwidth_hz must be positive");
    if (!std::isfinite(noise_power_dbm)) throw InvalidArgument("noise_power_dbm must be finite");
    if (!std::isfinite(tx_power_dbm)) throw InvalidArgument("tx_power_dbm must be finite");
}

void PathlossParams::validate() const {
    if (!(d0_m > 0.0)) throw InvalidArgument("pathloss d0_m must be positive");
    if (!(eta >= 0.0)) throw InvalidArgument("pathloss eta must be >= 0");
    if (!std::isfinite(k_db)) throw InvalidArgument("pathloss k_db must be finite");
}

void FieldParams::validate() const {
    if (!(shadow_std_db >= 0.0) || !(kfactor_std_db >= 0.0)) {
        throw InvalidArgument("field standard deviations must be >= 0");
    }
    if (!(shadow_corr_dist_m > 0.0) || !(kfactor_corr_dist_m > 0.0)) {
        throw InvalidArgument("field correlation distances must be positive");
    }
    if (!std::isfinite(kfactor_mean_db)) throw InvalidArgument("kfactor_mean_db must be finite");
}

double pathloss_db(const Point& x, const LinkBudget& budget, const PathlossParams& pl) {
    const double dh = budget.bs_height_m - budget.ue_height_m;
    const double horizontal = distance(x, budget.bs_position);
    const double d = std::max(std::sqrt(horizontal * horizontal + dh * dh), pl.d0_m);
    return pl.k_db - 10.0 * pl.eta * std::log10(d / pl.d0_m);
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct PointLess {
    bool operator()(const Point& a, const Point& b) const noexcept {
        return a.y < b.y || (a.y == b.y && a.x < b.x);
    }
};

/// Distinct points in first-seen order plus the map from input to distinct index.
struct Deduplicated {
    std::vector<Point> unique;
    std::vector<std::size_t> index;
};

Deduplicated deduplicate(std::span<const Point> points) {
    Deduplicated out;
    out.index.reserve(points.size());
    std::map<Point, std::size_t, PointLess> seen;
    for (const Point& p : points) {
        auto [it, inserted] = seen.emplace(p, out.unique.size());
        if (inserted) out.unique.push_back(p);
        out.index.push_back(it->second);
    }
    return out;
}

MatrixXd exp_covariance(std::span<const Point> a, std::span<const Point> b, double var,
                        double corr_dist) {
    MatrixXd c(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(b.size()));
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                var * std::exp(-distance(a[i], b[j]) / corr_dist);
        }
    }
    return c;
}

/// Lower Cholesky factor of `cov` with diagonal jitter 1e-10 var escalating
/// x10 up to 1e-4 var.
MatrixXd jittered_cholesky(const MatrixXd& cov, double var) {
    for (double rel = 1e-10; rel <= 1e-4 * (1.0 + 1e-9); rel *= 10.0) {
        MatrixXd m = cov;
        m.diagonal().array() += rel * var;
        Eigen::LLT<MatrixXd> llt(m);
        if (llt.info() == Eigen::Success) return llt.matrixL();
    }
    throw FactorizationFailure("field covariance is not positive definite after jitter 1e-4 * var");
}

VectorXd standard_normals(Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    VectorXd z(n);
    for (Eigen::Index i = 0; i < n; ++i) z(i) = normal(rng);
    return z;
}

}  // namespace

std::vector<double> sample_gaussian_field(std::span<const Point> points, double std_db,
                                          double corr_dist, std::uint64_t seed) {
    if (points.empty()) throw InvalidArgument("sample_gaussian_field needs at least one point");
    if (!(std_db >= 0.0)) throw InvalidArgument("field std must be >= 0");
    if (!(corr_dist > 0.0)) throw InvalidArgument("field correlation distance must be positive");
    if (std_db == 0.0) return std::vector<double>(points.size(), 0.0);

    const Deduplicated dd = deduplicate(points);
    const double var = std_db * std_db;
    const MatrixXd l = jittered_cholesky(exp_covariance(dd.unique, dd.unique, var, corr_dist), var);
    const VectorXd draw = l.triangularView<Eigen::Lower>() *
                          standard_normals(static_cast<Eigen::Index>(dd.unique.size()), seed);

    std::vector<double> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        out[i] = draw(static_cast<Eigen::Index>(dd.index[i]));
    }
    return out;
}

std::vector<double> extend_gaussian_field(std::span<const Point> support,
                                          std::span<const double> values,
                                          std::span<const Point> targets, double std_db,
                                          double corr_dist, std::uint64_t seed) {
    if (support.size() != values.size()) {
        throw InvalidArgument("extend_gaussian_field: support and values differ in length");
    }
    std::vector<double> out(targets.size(), 0.0);
    if (targets.empty() || std_db == 0.0) return out;

    std::map<Point, std::size_t, PointLess> known;
    std::vector<Point> support_unique;
    std::vector<double> values_unique;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (known.emplace(support[i], i).second) {
            support_unique.push_back(support[i]);
            values_unique.push_back(values[i]);
        }
    }

    std::vector<Point> fresh;
    std::vector<std::size_t> fresh_slots;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (auto it = known.find(targets[i]); it != known.end()) {
            out[i] = values[it->second];
        } else {
            fresh.push_back(targets[i]);
            fresh_slots.push_back(i);
        }
    }
    if (fresh.empty()) return out;
    if (support.empty()) {
        const auto draw = sample_gaussian_field(fresh, std_db, corr_dist, seed);
        for (std::size_t k = 0; k < fresh.size(); ++k) out[fresh_slots[k]] = draw[k];
        return out;
    }

    const double var = std_db * std_db;
    const Deduplicated dd = deduplicate(fresh);
    const MatrixXd l_ss =
        jittered_cholesky(exp_covariance(support_unique, support_unique, var, corr_dist), var);
    const auto lower = l_ss.triangularView<Eigen::Lower>();

    // A = L^-1 C_sp, so C_ps C_ss^-1 v = A^T L^-1 v and the conditional
    // covariance is C_pp - A^T A.
    const MatrixXd a = lower.solve(exp_covariance(support_unique, dd.unique, var, corr_dist));
    const VectorXd v = Eigen::Map<const VectorXd>(values_unique.data(),
                                                  static_cast<Eigen::Index>(values_unique.size()));
    const VectorXd mean = a.transpose() * lower.solve(v);
    MatrixXd cond = exp_covariance(dd.unique, dd.unique, var, corr_dist);
    cond.noalias() -= a.transpose() * a;
    cond = 0.5 * (cond + cond.transpose());
    const MatrixXd l_cond = jittered_cholesky(cond, var);
    const VectorXd draw =
        mean + l_cond.triangularView<Eigen::Lower>() *
                   standard_normals(static_cast<Eigen::Index>(dd.unique.size()), seed);

    for (std::size_t k = 0; k < fresh.size(); ++k) {
        out[fresh_slots[k]] = draw(static_cast<Eigen::Index>(dd.index[k]));
    }
    return out;
}

namespace {

void fill_mean_snr(GroundTruth& truth) {
    const std::size_t n = truth.locations.size();
    truth.mean_snr_db.resize(n);
    truth.kfactor_db.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        truth.mean_snr_db[i] = truth.budget.tx_power_dbm +
                               pathloss_db(truth.locations[i], truth.budget, truth.pathloss) +
                               truth.shadowing_db[i] - truth.budget.noise_power_dbm;
        truth.kfactor_db[i] = truth.fields.kfactor_mean_db + truth.kfactor_dev_db[i];
    }
}

}  // namespace

GroundTruth build_ground_truth(const LocationSet& locations, const LinkBudget& budget,
                               const PathlossParams& pl, const FieldParams& fields,
                               std::uint64_t seed) {
    budget.validate();
    pl.validate();
    fields.validate();

    GroundTruth truth;
    truth.locations = locations;
    truth.budget = budget;
    truth.pathloss = pl;
    truth.fields = fields;
    truth.seed = seed;
    truth.shadowing_db = sample_gaussian_field(locations.points, fields.shadow_std_db,
                                               fields.shadow_corr_dist_m,
                                               derive_seed(seed, "field.shadowing"));
    truth.kfactor_dev_db = sample_gaussian_field(locations.points, fields.kfactor_std_db,
                                                 fields.kfactor_corr_dist_m,
                                                 derive_seed(seed, "field.kfactor"));
    fill_mean_snr(truth);
    return truth;
}

GroundTruth ground_truth_at(const GroundTruth& truth, const LocationSet& targets,
                            std::uint64_t seed) {
    GroundTruth out;
    out.locations = targets;
    out.budget = truth.budget;
    out.pathloss = truth.pathloss;
    out.fields = truth.fields;
    out.seed = seed;
    out.shadowing_db = extend_gaussian_field(
        truth.locations.points, truth.shadowing_db, targets.points, truth.fields.shadow_std_db,
        truth.fields.shadow_corr_dist_m, derive_seed(seed, "field.shadowing.extend"));
    out.kfactor_dev_db = extend_gaussian_field(
        truth.locations.points, truth.kfactor_dev_db, targets.points,
        truth.fields.kfactor_std_db, truth.fields.kfactor_corr_dist_m,
        derive_seed(seed, "field.kfactor.extend"));
    fill_mean_snr(out);
    return out;
}

double rician_power_gain(double kappa, double g_real, double g_imag) noexcept {
    // g = (g_real + i g_imag) / sqrt(2) has unit power.
    const double los = std::sqrt(kappa / (kappa + 1.0));
    const double scatter = std::sqrt(1.0 / (2.0 * (kappa + 1.0)));
    const double re = los + scatter * g_real;
    const double im = scatter * g_imag;
    return re * re + im * im;
}

SnrDataset draw_snr_samples(const GroundTruth& truth, std::size_t n_samples,
                            std::uint64_t seed, unsigned threads) {
    if (n_samples < 1) throw InvalidArgument("draw_snr_samples needs n_samples >= 1");
    SnrDataset data;
    data.locations = truth.locations;
    data.n_samples = n_samples;
    data.samples.resize(truth.size() * n_samples);

    parallel_for(truth.size(), threads, [&](std::size_t d) {
        Rng rng(derive_seed(seed, "snr.location", d));
        std::normal_distribution<double> normal(0.0, 1.0);
        const double mean_linear = std::pow(10.0, truth.mean_snr_db[d] / 10.0);
        const double kappa = std::pow(10.0, truth.kfactor_db[d] / 10.0);
        auto row = data.row(d);
        for (double& w : row) {
            const double a = normal(rng);
            const double b = normal(rng);
            w = mean_linear * rician_power_gain(kappa, a, b);
            // Zero only on an exact cancellation; keep the positivity contract.
            if (!(w > 0.0)) w = std::numeric_limits<double>::denorm_min();
        }
    });
    return data;
}

}  // namespace radiomap
