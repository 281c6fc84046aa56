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
#include <vector>

namespace radiomap {

struct Point {
    double x = 0.0;  // meters
    double y = 0.0;  // meters

    friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b) noexcept;

/// Axis-aligned rectangle in meters.
struct Region {
    double x_min = -50.0;
    double x_max = 50.0;
    double y_min = -50.0;
    double y_max = 50.0;

    /// Throws InvalidArgument unless x_min < x_max and y_min < y_max.
    void validate() const;
    bool contains(const Point& p) const noexcept;
    double area() const noexcept { return (x_max - x_min) * (y_max - y_min); }
    Region expanded(double margin) const noexcept;

    friend bool operator==(const Region&, const Region&) = default;
};

/// Modified Thomas cluster process. Defaults are the values used for the
/// 100 m x 100 m reference cell.
struct ThomasParams {
    double parent_rate = 0.005;   // parents per m^2
    double daughter_mean = 100.0; // expected children per parent
    double daughter_std = 3.5;    // isotropic displacement, meters
    double sim_margin = 21.0;     // border simulated beyond the region, meters
    double grid_spacing = 2.0;    // survivors are rounded to this lattice
    std::size_t target_count = 500;

    void validate() const;
};

/// Ordered list of distinct points inside `region`.
struct LocationSet {
    std::vector<Point> points;
    Region region;

    std::size_t size() const noexcept { return points.size(); }
    bool empty() const noexcept { return points.empty(); }
    const Point& operator[](std::size_t i) const { return points[i]; }

    friend bool operator==(const LocationSet&, const LocationSet&) = default;
};

/// Raw output of the clustered process before clipping, used for diagnostics
/// and for checking the intensity of the sampler.
struct ThomasRealization {
    std::vector<Point> parents;
    std::vector<Point> daughters;  // all children, unclipped
};

ThomasRealization simulate_thomas(const ThomasParams& params, const Region& region,
                                  std::uint64_t seed);

/// Clustered locations: Thomas process on the margin-expanded region, clipped
/// to `region`, rounded to `grid_spacing`, deduplicated, then uniformly thinned
/// to `target_count`. Result is sorted row-major (y, then x).
///
/// Throws InsufficientPoints when fewer than `target_count` unique lattice
/// points survive.
LocationSet sample_thomas(const ThomasParams& params, const Region& region,
                          std::uint64_t seed);

/// `count` i.i.d. uniform points in `region` (continuous, not snapped).
LocationSet sample_binomial(std::size_t count, const Region& region, std::uint64_t seed);

/// Row-major lattice covering `region` including both boundary lines.
/// Throws NonconformingSpacing if `spacing` does not tile both sides.
LocationSet uniform_grid(const Region& region, double spacing);

/// Index of the point nearest to `target`; ties resolve to the lowest index.
std::size_t nearest_index(const LocationSet& set, const Point& target);

}  // namespace radiomap
