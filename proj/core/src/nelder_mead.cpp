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

#include "radiomap/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "radiomap/errors.hpp"

namespace radiomap {

namespace {

using Vec = std::vector<double>;

Vec affine(const Vec& a, const Vec& b, double t) {
    // a + t (b - a)
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, const NelderMeadOptions& options) {
    const std::size_t n = x0.size();
    if (n == 0) throw InvalidArgument("nelder_mead needs at least one dimension");

    NelderMeadResult result;
    auto eval = [&](const Vec& x) {
        ++result.evaluations;
        const double v = f(x);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };

    std::vector<Vec> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    for (;;) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[n - 1];

        const double spread = values[worst] - values[best];
        if (std::isfinite(values[worst]) && spread < options.f_tolerance) {
            result.converged = true;
            break;
        }
        if (result.iterations >= options.max_iterations) break;
        ++result.iterations;

        Vec centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        const Vec reflected = affine(centroid, simplex[worst], -1.0);
        const double f_reflected = eval(reflected);

        if (f_reflected < values[best]) {
            const Vec expanded = affine(centroid, simplex[worst], -2.0);
            const double f_expanded = eval(expanded);
            if (f_expanded < f_reflected) {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < values[second_worst]) {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
            continue;
        }

        const bool outside = f_reflected < values[worst];
        const Vec contracted = outside ? affine(centroid, reflected, 0.5)
                                       : affine(centroid, simplex[worst], 0.5);
        const double f_contracted = eval(contracted);
        if (f_contracted < (outside ? f_reflected : values[worst])) {
            simplex[worst] = contracted;
            values[worst] = f_contracted;
            continue;
        }

        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            simplex[i] = affine(simplex[best], simplex[i], 0.5);
            values[i] = eval(simplex[i]);
        }
    }

    const auto best_it = std::min_element(values.begin(), values.end());
    const auto best_index = static_cast<std::size_t>(best_it - values.begin());
    result.x = simplex[best_index];
    result.f = *best_it;
    return result;
}

}  // namespace radiomap
