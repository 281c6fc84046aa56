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

#include "radiomap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "radiomap/errors.hpp"
#include "radiomap/random.hpp"

namespace radiomap {

double distance(const Point& a, const Point& b) noexcept {
    return std::hypot(a.x - b.x, a.y - b.y);
}

void Region::validate() const {
    if (!(x_min < x_max) || !(y_min < y_max)) {
        throw InvalidArgument("region must satisfy x_min < x_max and y_min < y_max");
    }
}

bool Region::contains(const Point& p) const noexcept {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
}

Region Region::expanded(double margin) const noexcept {
    return {x_min - margin, x_max + margin, y_min - margin, y_max + margin};
}

void ThomasParams::validate() const {
    if (!(parent_rate > 0.0) || !(daughter_mean > 0.0) || !(daughter_std > 0.0) ||
        !(grid_spacing > 0.0) || !(sim_margin >= 0.0)) {
        throw InvalidArgument("Thomas parameters must be strictly positive");
    }
    if (target_count < 1) throw InvalidArgument("Thomas target_count must be >= 1");
}

ThomasRealization simulate_thomas(const ThomasParams& params, const Region& region,
                                  std::uint64_t seed) {
    params.validate();
    region.validate();

    Rng rng(seed);
    const Region window = region.expanded(params.sim_margin);
    std::poisson_distribution<long> parent_count(params.parent_rate * window.area());
    std::uniform_real_distribution<double> ux(window.x_min, window.x_max);
    std::uniform_real_distribution<double> uy(window.y_min, window.y_max);
    std::poisson_distribution<long> child_count(params.daughter_mean);
    std::normal_distribution<double> offset(0.0, params.daughter_std);

    ThomasRealization out;
    const long n_parents = parent_count(rng);
    out.parents.reserve(static_cast<std::size_t>(n_parents));
    for (long i = 0; i < n_parents; ++i) {
        const double px = ux(rng);
        const double py = uy(rng);
        out.parents.push_back({px, py});
    }
    for (const Point& parent : out.parents) {
        const long n_children = child_count(rng);
        for (long c = 0; c < n_children; ++c) {
            const double dx = offset(rng);
            const double dy = offset(rng);
            out.daughters.push_back({parent.x + dx, parent.y + dy});
        }
    }
    return out;
}

namespace {

struct LatticeKey {
    long long iy;
    long long ix;
    auto operator<=>(const LatticeKey&) const = default;
};

}  // namespace

LocationSet sample_thomas(const ThomasParams& params, const Region& region,
                          std::uint64_t seed) {
    const ThomasRealization raw = simulate_thomas(params, region, seed);
    const double h = params.grid_spacing;

    // std::llround rounds half away from zero.
    std::set<LatticeKey> unique;
    for (const Point& p : raw.daughters) {
        if (!region.contains(p)) continue;
        const LatticeKey key{std::llround(p.y / h), std::llround(p.x / h)};
        const Point snapped{static_cast<double>(key.ix) * h, static_cast<double>(key.iy) * h};
        if (!region.contains(snapped)) continue;
        unique.insert(key);
    }
    if (unique.size() < params.target_count) {
        throw InsufficientPoints("Thomas process produced " + std::to_string(unique.size()) +
                                 " unique lattice points, need " +
                                 std::to_string(params.target_count));
    }

    std::vector<LatticeKey> keys(unique.begin(), unique.end());
    // Thinning uses a stream independent of the point-process draws.
    Rng thin_rng(derive_seed(seed, "thomas.thinning"));
    std::shuffle(keys.begin(), keys.end(), thin_rng);
    keys.resize(params.target_count);
    std::sort(keys.begin(), keys.end());

    LocationSet out;
    out.region = region;
    out.points.reserve(keys.size());
    for (const LatticeKey& k : keys) {
        out.points.push_back({static_cast<double>(k.ix) * h, static_cast<double>(k.iy) * h});
    }
    return out;
}

LocationSet sample_binomial(std::size_t count, const Region& region, std::uint64_t seed) {
    if (count < 1) throw InvalidArgument("binomial point process needs count >= 1");
    region.validate();

    Rng rng(seed);
    std::uniform_real_distribution<double> ux(region.x_min, region.x_max);
    std::uniform_real_distribution<double> uy(region.y_min, region.y_max);

    LocationSet out;
    out.region = region;
    out.points.reserve(count);
    std::set<std::pair<double, double>> seen;
    while (out.points.size() < count) {
        const double x = ux(rng);
        const double y = uy(rng);
        if (!seen.emplace(x, y).second) continue;
        out.points.push_back({x, y});
    }
    return out;
}

namespace {

std::size_t steps_for(double length, double spacing) {
    const double n = length / spacing;
    const double rounded = std::round(n);
    if (rounded < 1.0 || std::abs(n - rounded) > 1e-9 * std::max(1.0, n)) {
        throw NonconformingSpacing("spacing " + std::to_string(spacing) +
                                   " does not tile side length " + std::to_string(length));
    }
    return static_cast<std::size_t>(rounded);
}

}  // namespace

LocationSet uniform_grid(const Region& region, double spacing) {
    region.validate();
    if (!(spacing > 0.0)) throw NonconformingSpacing("grid spacing must be positive");
    const std::size_t nx = steps_for(region.x_max - region.x_min, spacing);
    const std::size_t ny = steps_for(region.y_max - region.y_min, spacing);

    LocationSet out;
    out.region = region;
    out.points.reserve((nx + 1) * (ny + 1));
    for (std::size_t iy = 0; iy <= ny; ++iy) {
        const double y = iy == ny ? region.y_max : region.y_min + static_cast<double>(iy) * spacing;
        for (std::size_t ix = 0; ix <= nx; ++ix) {
            const double x =
                ix == nx ? region.x_max : region.x_min + static_cast<double>(ix) * spacing;
            out.points.push_back({x, y});
        }
    }
    return out;
}

std::size_t nearest_index(const LocationSet& set, const Point& target) {
    if (set.empty()) throw InvalidArgument("nearest_index on an empty location set");
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < set.size(); ++i) {
        const double dx = set[i].x - target.x;
        const double dy = set[i].y - target.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

}  // namespace radiomap
