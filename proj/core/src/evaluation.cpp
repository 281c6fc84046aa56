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

#include "radiomap/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radiomap/errors.hpp"
#include "radiomap/parallel.hpp"

namespace radiomap {

namespace {

bool in_outage(double w, double rate) noexcept { return std::log2(1.0 + w) < rate; }

}  // namespace

double empirical_outage(double rate, std::span<const double> test_samples) {
    if (test_samples.empty()) throw InvalidArgument("empirical_outage needs test samples");
    std::size_t count = 0;
    for (double w : test_samples) count += in_outage(w, rate) ? 1 : 0;
    return static_cast<double>(count) / static_cast<double>(test_samples.size());
}

SortedTestData::SortedTestData(const SnrDataset& test, unsigned threads)
    : grid_(test.locations), n_samples_(test.n_samples), sorted_(test.samples) {
    if (n_samples_ == 0) throw InvalidArgument("test data has no samples");
    parallel_for(grid_.size(), threads, [&](std::size_t i) {
        auto begin = sorted_.begin() + static_cast<std::ptrdiff_t>(i * n_samples_);
        std::sort(begin, begin + static_cast<std::ptrdiff_t>(n_samples_));
    });
}

double SortedTestData::outage(std::size_t i, double rate) const {
    const auto row = sorted_row(i);
    // log2(1 + w) is nondecreasing in w, so outage samples form a prefix.
    const auto end = std::partition_point(row.begin(), row.end(),
                                          [rate](double w) { return in_outage(w, rate); });
    return static_cast<double>(end - row.begin()) / static_cast<double>(n_samples_);
}

double SortedTestData::order_statistic(std::size_t i, std::size_t rank) const {
    if (rank < 1 || rank > n_samples_) throw InsufficientSamples("order statistic rank out of range");
    return sorted_row(i)[rank - 1];
}

std::string RateMap::label() const {
    if (method == RateMethod::baseline) return "baseline";
    std::ostringstream os;
    os << "predictive_delta_" << delta;
    return os.str();
}

OutageMap evaluate_rate_map(const RateMap& rates, const SortedTestData& test) {
    if (rates.grid.points != test.grid().points || rates.rates.size() != test.size()) {
        throw GridMismatch("rate map grid does not match the test data grid");
    }
    OutageMap out;
    out.grid = rates.grid;
    out.rate_source = rates.method;
    out.label = rates.label();
    out.epsilon = rates.epsilon;
    out.n_test = test.n_samples();
    out.p_out.resize(test.size());
    for (std::size_t i = 0; i < test.size(); ++i) out.p_out[i] = test.outage(i, rates.rates[i]);
    return out;
}

std::vector<OutageMap> evaluate_rate_maps(std::span<const RateMap> rates, const SnrDataset& test) {
    const SortedTestData sorted(test);
    std::vector<OutageMap> out;
    out.reserve(rates.size());
    for (const RateMap& r : rates) out.push_back(evaluate_rate_map(r, sorted));
    return out;
}

double normalized_throughput(double rate, double p_out, double true_quantile_linear,
                             double epsilon) {
    if (!(true_quantile_linear > 0.0)) {
        throw DegenerateCapacity("true quantile must be positive for a nonzero outage capacity");
    }
    const double capacity = std::log2(1.0 + true_quantile_linear);
    if (!(capacity > 0.0)) throw DegenerateCapacity("epsilon-outage capacity is zero");
    return rate * (1.0 - p_out) / (capacity * (1.0 - epsilon));
}

ThroughputReport throughput_report(const OutageMap& outage, const RateMap& rates,
                                   std::span<const double> true_quantile_linear) {
    if (outage.p_out.size() != rates.rates.size() ||
        true_quantile_linear.size() != rates.rates.size()) {
        throw GridMismatch("throughput inputs differ in length");
    }
    ThroughputReport out;
    out.grid = outage.grid;
    out.label = outage.label;
    out.epsilon = outage.epsilon;
    out.norm_throughput.resize(rates.rates.size());
    for (std::size_t i = 0; i < rates.rates.size(); ++i) {
        out.norm_throughput[i] = normalized_throughput(rates.rates[i], outage.p_out[i],
                                                       true_quantile_linear[i], outage.epsilon);
    }
    return out;
}

double EmpiricalCdf::operator()(double x) const {
    const auto it = std::upper_bound(values.begin(), values.end(), x);
    if (it == values.begin()) return 0.0;
    return cum_prob[static_cast<std::size_t>(it - values.begin()) - 1];
}

EmpiricalCdf empirical_cdf(std::span<const double> values) {
    if (values.empty()) throw InvalidArgument("empirical_cdf needs at least one value");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());

    EmpiricalCdf cdf;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
        cdf.values.push_back(sorted[i]);
        cdf.cum_prob.push_back(i + 1 == sorted.size() ? 1.0 : static_cast<double>(i + 1) / n);
    }
    return cdf;
}

double fraction_above(std::span<const double> values, double threshold) {
    if (values.empty()) return 0.0;
    const auto count = std::count_if(values.begin(), values.end(),
                                     [threshold](double v) { return v > threshold; });
    return static_cast<double>(count) / static_cast<double>(values.size());
}

}  // namespace radiomap
