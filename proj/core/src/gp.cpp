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

#include "radiomap/gp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "radiomap/errors.hpp"
#include "radiomap/nelder_mead.hpp"
#include "radiomap/parallel.hpp"
#include "radiomap/random.hpp"

namespace radiomap {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

void GpHyperparams::validate() const {
    if (!(signal_var > 0.0) || !(corr_dist > 0.0) || !(noise_var >= 0.0) ||
        !std::isfinite(signal_var) || !std::isfinite(corr_dist) || !std::isfinite(noise_var)) {
        throw InvalidArgument("GP hyperparameters need signal_var > 0, corr_dist > 0, noise_var >= 0");
    }
}

void FitBounds::validate() const {
    const bool ok = signal_var_min > 0.0 && signal_var_min <= signal_var_max &&
                    corr_dist_min > 0.0 && corr_dist_min <= corr_dist_max &&
                    noise_var_min > 0.0 && noise_var_min <= noise_var_max;
    if (!ok) throw InvalidArgument("GP fit bounds must be positive and ordered");
}

double kernel(const Point& a, const Point& b, const GpHyperparams& hp) noexcept {
    return hp.signal_var * std::exp(-distance(a, b) / hp.corr_dist);
}

namespace {

MatrixXd pairwise_distances(const LocationSet& a, const LocationSet& b) {
    MatrixXd d(static_cast<Index>(a.size()), static_cast<Index>(b.size()));
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            d(static_cast<Index>(i), static_cast<Index>(j)) = distance(a[i], b[j]);
        }
    }
    return d;
}

MatrixXd gram_from_distances(const MatrixXd& dist, const GpHyperparams& hp) {
    return hp.signal_var * (-dist.array() / hp.corr_dist).exp().matrix();
}

struct TrainFactor {
    Eigen::LLT<MatrixXd> llt;
    double jitter = 0.0;
};

std::optional<TrainFactor> try_factorize(const MatrixXd& train_dist, const GpHyperparams& hp) {
    MatrixXd k = gram_from_distances(train_dist, hp);
    k.diagonal().array() += hp.noise_var;
    for (double jitter : kGpJitterSchedule) {
        MatrixXd m = k;
        if (jitter > 0.0) m.diagonal().array() += jitter;
        TrainFactor f{Eigen::LLT<MatrixXd>(m), jitter};
        if (f.llt.info() == Eigen::Success) return f;
    }
    return std::nullopt;
}

TrainFactor factorize(const MatrixXd& train_dist, const GpHyperparams& hp) {
    auto f = try_factorize(train_dist, hp);
    if (!f) {
        throw FactorizationFailure("training Gram matrix not positive definite after jitter " +
                                   std::to_string(kGpJitterSchedule[std::size(kGpJitterSchedule) - 1]));
    }
    return std::move(*f);
}

VectorXd as_vector(std::span<const double> v) {
    return Eigen::Map<const VectorXd>(v.data(), static_cast<Index>(v.size()));
}

double lml_from_factor(const TrainFactor& f, const VectorXd& y) {
    const VectorXd alpha = f.llt.solve(y);
    const double log_det_half = f.llt.matrixLLT().diagonal().array().log().sum();
    const double n = static_cast<double>(y.size());
    return -0.5 * y.dot(alpha) - log_det_half - 0.5 * n * std::log(2.0 * std::numbers::pi);
}

void check_training(const LocationSet& train, std::span<const double> rho) {
    if (train.empty()) throw InvalidArgument("GP needs at least one training point");
    if (train.size() != rho.size()) {
        throw InvalidArgument("GP training locations and observations differ in length");
    }
}

}  // namespace

PredictiveMap predict(const LocationSet& train, std::span<const double> rho,
                      const LocationSet& grid, const GpHyperparams& hp,
                      const PredictOptions& options) {
    check_training(train, rho);
    hp.validate();
    const TrainFactor f = factorize(pairwise_distances(train, train), hp);
    const VectorXd alpha = f.llt.solve(as_vector(rho));
    const auto lower = f.llt.matrixL();

    PredictiveMap out;
    out.grid = grid;
    out.hyperparams = hp;
    out.jitter = f.jitter;
    out.mean.resize(grid.size());
    out.var.resize(grid.size());

    const std::size_t block = std::max<std::size_t>(1, options.block_size);
    const std::size_t n_blocks = (grid.size() + block - 1) / block;
    parallel_for(n_blocks, options.threads, [&](std::size_t b) {
        const std::size_t begin = b * block;
        const std::size_t end = std::min(grid.size(), begin + block);
        const auto count = static_cast<Index>(end - begin);
        MatrixXd cross(static_cast<Index>(train.size()), count);  // Sigma_{X X*}
        for (Index j = 0; j < count; ++j) {
            const Point& g = grid[begin + static_cast<std::size_t>(j)];
            for (std::size_t i = 0; i < train.size(); ++i) {
                cross(static_cast<Index>(i), j) = kernel(train[i], g, hp);
            }
        }
        const VectorXd mean = cross.transpose() * alpha;
        const MatrixXd v = lower.solve(cross);
        const VectorXd reduction = v.colwise().squaredNorm().transpose();
        for (Index j = 0; j < count; ++j) {
            const auto k = begin + static_cast<std::size_t>(j);
            out.mean[k] = mean(j);
            out.var[k] = std::clamp(hp.signal_var - reduction(j), 0.0, hp.signal_var);
        }
    });
    return out;
}

PredictiveMap predict(const QuantileDataset& qd, const LocationSet& grid,
                      const GpHyperparams& hp, const PredictOptions& options) {
    PredictiveMap out = predict(qd.locations, qd.rho_hat, grid, hp, options);
    out.q_bar = qd.q_bar;
    out.s = qd.s;
    return out;
}

double log_marginal_likelihood(const LocationSet& train, std::span<const double> rho,
                               const GpHyperparams& hp) {
    check_training(train, rho);
    hp.validate();
    const TrainFactor f = factorize(pairwise_distances(train, train), hp);
    return lml_from_factor(f, as_vector(rho));
}

double log_marginal_likelihood(const QuantileDataset& qd, const GpHyperparams& hp) {
    return log_marginal_likelihood(qd.locations, qd.rho_hat, hp);
}

namespace {

struct LogBox {
    std::array<double, 3> lo;
    std::array<double, 3> hi;
};

GpHyperparams from_log(std::span<const double> u, const FitBounds& b) {
    // Clamp again in linear space; exp(log(x)) may miss a bound by an ulp.
    return {std::clamp(std::exp(u[0]), b.signal_var_min, b.signal_var_max),
            std::clamp(std::exp(u[1]), b.corr_dist_min, b.corr_dist_max),
            std::clamp(std::exp(u[2]), b.noise_var_min, b.noise_var_max)};
}

}  // namespace

FitResult fit_hyperparameters(const LocationSet& train, std::span<const double> rho,
                              const FitSettings& settings) {
    check_training(train, rho);
    if (train.size() < 5) {
        throw InvalidArgument("hyperparameter fit needs at least 5 locations, got " +
                              std::to_string(train.size()));
    }
    settings.bounds.validate();
    if (settings.n_starts < 1) throw InvalidArgument("fit needs at least one start");

    const FitBounds& b = settings.bounds;
    const LogBox box{{std::log(b.signal_var_min), std::log(b.corr_dist_min), std::log(b.noise_var_min)},
                     {std::log(b.signal_var_max), std::log(b.corr_dist_max), std::log(b.noise_var_max)}};
    const MatrixXd dist = pairwise_distances(train, train);
    const VectorXd y = as_vector(rho);

    FitResult result;
    result.log_likelihood = -std::numeric_limits<double>::infinity();
    bool any_finite = false;

    // Log-likelihood at a point inside the box; -inf when factorization fails.
    auto lml_at = [&](const std::array<double, 3>& u) {
        ++result.evaluations;
        const GpHyperparams hp = from_log(u, b);
        const auto f = try_factorize(dist, hp);
        const double value = f ? lml_from_factor(*f, y) : -std::numeric_limits<double>::infinity();
        if (std::isfinite(value)) {
            any_finite = true;
            if (value > result.log_likelihood) {
                result.log_likelihood = value;
                result.hyperparams = hp;
            }
        }
        return value;
    };
    auto project = [&](std::span<const double> u) {
        std::array<double, 3> p{};
        for (std::size_t k = 0; k < 3; ++k) p[k] = std::clamp(u[k], box.lo[k], box.hi[k]);
        return p;
    };
    // Objective on all of R^3: evaluate at the projection, add a quadratic
    // pull back toward the box.
    auto objective = [&](std::span<const double> u) {
        const auto p = project(u);
        double penalty = 0.0;
        for (std::size_t k = 0; k < 3; ++k) penalty += (u[k] - p[k]) * (u[k] - p[k]);
        return -lml_at(p) + penalty;
    };

    Rng rng(settings.seed);
    NelderMeadOptions nm;
    nm.max_iterations = settings.max_iterations;
    nm.f_tolerance = settings.f_tolerance;
    for (std::size_t s = 0; s < settings.n_starts; ++s) {
        std::array<double, 3> u0{};
        for (std::size_t k = 0; k < 3; ++k) {
            u0[k] = std::uniform_real_distribution<double>(box.lo[k], box.hi[k])(rng);
        }
        FitStart start;
        start.initial = from_log(u0, b);
        start.initial_log_likelihood = lml_at(u0);

        const NelderMeadResult r = nelder_mead(objective, {u0.begin(), u0.end()}, nm);
        const auto p = project(r.x);
        start.final = from_log(p, b);
        start.final_log_likelihood = lml_at(p);
        start.iterations = r.iterations;
        result.starts.push_back(start);
    }
    if (!any_finite) throw FitDiverged("no start produced a finite log marginal likelihood");
    return result;
}

FitResult fit_hyperparameters(const QuantileDataset& qd, const FitSettings& settings) {
    return fit_hyperparameters(qd.locations, qd.rho_hat, settings);
}

}  // namespace radiomap
