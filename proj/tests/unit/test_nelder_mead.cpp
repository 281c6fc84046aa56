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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "radiomap/nelder_mead.hpp"

using namespace radiomap;

TEST_CASE("Nelder-Mead minimizes a shifted quadratic") {
    auto f = [](std::span<const double> x) {
        return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 2.0) * (x[1] + 2.0) + 3.0;
    };
    NelderMeadOptions opt;
    opt.f_tolerance = 1e-14;
    opt.max_iterations = 2000;
    const NelderMeadResult r = nelder_mead(f, {0.0, 0.0}, opt);
    CHECK(r.converged);
    CHECK(std::abs(r.x[0] - 1.0) < 1e-5);
    CHECK(std::abs(r.x[1] + 2.0) < 1e-5);
    CHECK(std::abs(r.f - 3.0) < 1e-10);
}

TEST_CASE("Nelder-Mead follows the Rosenbrock valley") {
    auto f = [](std::span<const double> x) {
        return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
    };
    NelderMeadOptions opt;
    opt.f_tolerance = 1e-16;
    opt.max_iterations = 5000;
    const NelderMeadResult r = nelder_mead(f, {-1.2, 1.0}, opt);
    CHECK(std::abs(r.x[0] - 1.0) < 1e-3);
    CHECK(std::abs(r.x[1] - 1.0) < 1e-3);
}

TEST_CASE("Nelder-Mead treats non-finite values as +inf") {
    auto f = [](std::span<const double> x) { return x[0] < 0.0 ? NAN : (x[0] - 2.0) * (x[0] - 2.0); };
    const NelderMeadResult r = nelder_mead(f, {0.5}, {.max_iterations = 500, .f_tolerance = 1e-12});
    CHECK(std::isfinite(r.f));
    CHECK(std::abs(r.x[0] - 2.0) < 1e-4);
}

TEST_CASE("Nelder-Mead respects the iteration cap") {
    auto f = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; };
    const NelderMeadResult r = nelder_mead(f, {10.0, 10.0}, {.max_iterations = 3, .f_tolerance = 0.0});
    CHECK(r.iterations <= 3);
    CHECK_FALSE(r.converged);
}
