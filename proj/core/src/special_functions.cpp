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

#include "radiomap/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "radiomap/errors.hpp"

namespace radiomap {

namespace {

template <std::size_t N>
double horner(const std::array<double, N>& c, double x) {
    // c[0] + c[1] x + ... + c[N-1] x^(N-1)
    double acc = c[N - 1];
    for (std::size_t i = N - 1; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// Wichura (1988), Algorithm AS 241, PPND16.
constexpr std::array<double, 8> kA{3.3871328727963666080e0,  1.3314166789178437745e+2,
                                   1.9715909503065514427e+3, 1.3731693765509461125e+4,
                                   4.5921953931549871457e+4, 6.7265770927008700853e+4,
                                   3.3430575583588128105e+4, 2.5090809287301226727e+3};
constexpr std::array<double, 8> kB{1.0,
                                   4.2313330701600911252e+1, 6.8718700749205790830e+2,
                                   5.3941960214247511077e+3, 2.1213794301586595867e+4,
                                   3.9307895800092710610e+4, 2.8729085735721942674e+4,
                                   5.2264952788528545610e+3};
constexpr std::array<double, 8> kC{1.42343711074968357734e0,  4.63033784615654529590e0,
                                   5.76949722146069140550e0,  3.64784832476320460504e0,
                                   1.27045825245236838258e0,  2.41780725177450611770e-1,
                                   2.27238449892691845833e-2, 7.74545014278341407640e-4};
constexpr std::array<double, 8> kD{1.0,
                                   2.05319162663775882187e0,  1.67638483018380384940e0,
                                   6.89767334985100004550e-1, 1.48103976427480074590e-1,
                                   1.51986665636164571966e-2, 5.47593808499534494600e-4,
                                   1.05075007164441684324e-9};
constexpr std::array<double, 8> kE{6.65790464350110377720e0,  5.46378491116411436990e0,
                                   1.78482653991729133580e0,  2.96560571828504891230e-1,
                                   2.65321895265761230930e-2, 1.24266094738807843860e-3,
                                   2.71155556874348757815e-5, 2.01033439929228813265e-7};
constexpr std::array<double, 8> kF{1.0,
                                   5.99832206555887937690e-1, 1.36929880922735805310e-1,
                                   1.48753612908506148525e-2, 7.86869131145613259100e-4,
                                   1.84631831751005468180e-5, 1.42151175831644588870e-7,
                                   2.04426310338993978564e-15};

/// Lower-tail quantile for 0 < p <= 0.5 given both p and its complement,
/// so callers can pass an exactly computed tail mass.
double normal_quantile_tail(double p) {
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q * horner(kA, r) / horner(kB, r);
    }
    double r = std::sqrt(-std::log(p));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        x = horner(kC, r) / horner(kD, r);
    } else {
        r -= 5.0;
        x = horner(kE, r) / horner(kF, r);
    }
    return -x;
}

}  // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("normal_quantile requires 0 < p < 1");
    return p <= 0.5 ? normal_quantile_tail(p) : -normal_quantile_tail(1.0 - p);
}

double inverse_erf(double p) {
    if (!(p > -1.0 && p < 1.0)) throw DomainError("inverse_erf requires -1 < p < 1");
    if (p == 0.0) return 0.0;
    if (p < 0.0) return -inverse_erf(-p);

    // erf^-1(p) = -Phi^-1((1 - p) / 2) / sqrt(2); 1 - p is exact for p >= 0.5.
    const double tail = 1.0 - p;
    double x = -normal_quantile_tail(0.5 * tail) / std::numbers::sqrt2;

    // Newton on f(x) = erf(x) - p, using erfc in the upper range for accuracy.
    const double slope_scale = 2.0 / std::sqrt(std::numbers::pi);
    for (int i = 0; i < 2; ++i) {
        const double residual = p < 0.5 ? std::erf(x) - p : tail - std::erfc(x);
        const double slope = slope_scale * std::exp(-x * x);
        if (slope == 0.0) break;
        x -= residual / slope;
    }
    return x;
}

}  // namespace radiomap
