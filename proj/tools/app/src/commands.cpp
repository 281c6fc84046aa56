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

#include "radiomap/app/commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <utility>

#include "radiomap/campaign.hpp"
#include "radiomap/errors.hpp"
#include "radiomap/io.hpp"
#include "radiomap/parallel.hpp"
#include "radiomap/random.hpp"
#include "radiomap/rate.hpp"

namespace radiomap::app {

namespace fs = std::filesystem;
using nlohmann::json;

std::string delta_tag(double delta) {
    std::ostringstream os;
    os << delta;
    return os.str();
}

std::string rates_csv_name(double delta) { return "rates_delta_" + delta_tag(delta) + ".csv"; }
std::string rates_json_name(double delta) { return "rates_delta_" + delta_tag(delta) + ".json"; }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

fs::path prepare_output_dir(const RunConfig& config) {
    const fs::path& dir = config.output_dir;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    }
    return dir;
}

unsigned thread_count(const RunConfig& config) { return resolve_threads(config.campaign.threads); }

std::uint64_t seed_for(const RunConfig& config, StageRecord& record, const std::string& label) {
    const std::uint64_t s = derive_seed(config.campaign.master_seed, label);
    record.seeds[label] = s;
    return s;
}

LocationSet config_grid(const RunConfig& config) {
    return uniform_grid(config.campaign.region, config.campaign.grid_spacing);
}

/// `a` followed by the points of `b` not already in `a`.
LocationSet merge_locations(const LocationSet& a, const LocationSet& b) {
    LocationSet out = a;
    std::set<std::pair<double, double>> seen;
    for (const Point& p : a.points) seen.emplace(p.x, p.y);
    for (const Point& p : b.points) {
        if (seen.emplace(p.x, p.y).second) out.points.push_back(p);
    }
    return out;
}

SnrDataset load_dataset(const fs::path& dir, const char* locations, const char* samples,
                        const Region& region) {
    return io::read_snr_matrix(dir / samples, io::read_locations_csv(dir / locations, region));
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double m = v[mid];
    if (v.size() % 2 == 0) {
        m = 0.5 * (m + *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid)));
    }
    return m;
}

double fraction_at_most(std::span<const double> v, double threshold) {
    if (v.empty()) return 0.0;
    return 1.0 - fraction_above(v, threshold);
}

json method_summary(std::span<const double> p_out, std::span<const double> throughput, double epsilon) {
    return json{{"fraction_p_out_above_epsilon", fraction_above(p_out, epsilon)},
                {"median_normalized_throughput",
                 median(std::vector<double>(throughput.begin(), throughput.end()))},
                {"fraction_normalized_throughput_at_most_1", fraction_at_most(throughput, 1.0)},
                {"pairs", p_out.size()}};
}

void write_json(const fs::path& path, const json& j) { io::write_text(path, j.dump(2) + "\n"); }

}  // namespace

StageRecord cmd_synth(const RunConfig& config) {
    config.validate();
    const auto t0 = Clock::now();
    const fs::path dir = prepare_output_dir(config);
    const CampaignConfig& c = config.campaign;
    StageRecord rec;
    rec.stage = "synth";

    const LocationSet train_locs = sample_training_locations(c, seed_for(config, rec, "synth.locations"));
    const LocationSet grid = config_grid(config);
    const LocationSet support = merge_locations(train_locs, grid);
    const GroundTruth truth = build_ground_truth(support, c.budget, c.pathloss, c.fields,
                                                 seed_for(config, rec, "synth.truth"));
    // Every target lies in the support, so these copies are exact.
    const std::uint64_t ext = seed_for(config, rec, "synth.extension");
    const GroundTruth train_truth = ground_truth_at(truth, train_locs, ext);
    const GroundTruth grid_truth = ground_truth_at(truth, grid, ext);

    const unsigned threads = thread_count(config);
    const SnrDataset train =
        draw_snr_samples(train_truth, c.n_samples, seed_for(config, rec, "synth.train_snr"), threads);
    const SnrDataset test =
        draw_snr_samples(grid_truth, c.n_test, seed_for(config, rec, "synth.test_snr"), threads);

    io::write_ground_truth_csv(dir / files::ground_truth, truth);
    io::write_locations_csv(dir / files::train_locations, train.locations);
    io::write_snr_matrix(dir / files::train_snr, train);
    io::write_locations_csv(dir / files::test_locations, test.locations);
    io::write_snr_matrix(dir / files::test_snr, test);
    rec.artifacts = {dir / files::ground_truth, dir / files::train_locations, dir / files::train_snr,
                     dir / files::test_locations, dir / files::test_snr};
    rec.seconds = seconds_since(t0);
    record_stage(dir, config, rec);
    return rec;
}

StageRecord cmd_build_map(const RunConfig& config) {
    config.validate();
    const auto t0 = Clock::now();
    const fs::path dir = prepare_output_dir(config);
    const CampaignConfig& c = config.campaign;
    StageRecord rec;
    rec.stage = "build-map";

    const SnrDataset train = load_dataset(dir, files::train_locations, files::train_snr, c.region);
    const unsigned threads = thread_count(config);
    const QuantileDataset qd = build_quantile_dataset(train, c.epsilon, threads);
    FitSettings fit = c.fit;
    fit.seed = seed_for(config, rec, "build.fit");
    const FitResult fitted = fit_hyperparameters(qd, fit);
    const PredictiveMap map = predict(qd, config_grid(config), fitted.hyperparams, {.threads = threads});

    io::write_quantiles(dir / files::quantiles_csv, dir / files::quantiles_json, qd);
    io::write_predictive_map(dir / files::map_csv, dir / files::map_json, map);
    rec.artifacts = {dir / files::quantiles_csv, dir / files::quantiles_json, dir / files::map_csv,
                     dir / files::map_json};
    rec.seconds = seconds_since(t0);
    record_stage(dir, config, rec);
    return rec;
}

StageRecord cmd_select(const RunConfig& config) {
    config.validate();
    const auto t0 = Clock::now();
    const fs::path dir = prepare_output_dir(config);
    const CampaignConfig& c = config.campaign;
    StageRecord rec;
    rec.stage = "select";

    const PredictiveMap map =
        io::read_predictive_map(dir / files::map_csv, dir / files::map_json, c.region);
    const SnrDataset train = load_dataset(dir, files::train_locations, files::train_snr, c.region);
    const std::vector<double> baseline = baseline_rate_map(train, map.grid, c.epsilon);

    for (double delta : c.deltas) {
        io::RatePair pair{map.grid, predictive_rate_map(map, delta), baseline, c.epsilon, delta};
        const fs::path csv = dir / rates_csv_name(delta);
        const fs::path js = dir / rates_json_name(delta);
        io::write_rate_pair(csv, js, pair);
        rec.artifacts.push_back(csv);
        rec.artifacts.push_back(js);
    }
    rec.seconds = seconds_since(t0);
    record_stage(dir, config, rec);
    return rec;
}

StageRecord cmd_evaluate(const RunConfig& config) {
    config.validate();
    const auto t0 = Clock::now();
    const fs::path dir = prepare_output_dir(config);
    const CampaignConfig& c = config.campaign;
    StageRecord rec;
    rec.stage = "evaluate";

    const SnrDataset test = load_dataset(dir, files::test_locations, files::test_snr, c.region);
    const SortedTestData sorted(test, thread_count(config));
    const std::size_t rank = order_statistic_rank(sorted.n_samples(), c.epsilon);
    if (rank < 1) throw InsufficientSamples("test data too small for the requested epsilon");
    std::vector<double> true_q(sorted.size());
    std::vector<double> capacity(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        true_q[i] = sorted.order_statistic(i, rank);
        capacity[i] = outage_capacity(true_q[i]);
    }
    io::write_grid_table(dir / files::true_capacity, sorted.grid(),
                         {"true_quantile_linear", "outage_capacity"}, {true_q, capacity});
    rec.artifacts.push_back(dir / files::true_capacity);

    json summary{{"epsilon", c.epsilon}, {"n_test", sorted.n_samples()}, {"methods", json::object()}};
    bool baseline_done = false;
    for (double delta : c.deltas) {
        const io::RatePair pair =
            io::read_rate_pair(dir / rates_csv_name(delta), dir / rates_json_name(delta), c.region);
        RateMap pred{pair.grid, pair.predictive, RateMethod::predictive, pair.epsilon, pair.delta};
        RateMap base{pair.grid, pair.baseline, RateMethod::baseline, pair.epsilon, 0.0};
        const OutageMap out_p = evaluate_rate_map(pred, sorted);
        const OutageMap out_b = evaluate_rate_map(base, sorted);
        const ThroughputReport thr_p = throughput_report(out_p, pred, true_q);
        const ThroughputReport thr_b = throughput_report(out_b, base, true_q);

        const std::string tag = delta_tag(delta);
        const fs::path outage = dir / ("outage_delta_" + tag + ".csv");
        const fs::path thr = dir / ("throughput_delta_" + tag + ".csv");
        io::write_grid_table(outage, pair.grid, {"p_out_predictive", "p_out_baseline"},
                             {out_p.p_out, out_b.p_out});
        io::write_grid_table(thr, pair.grid, {"norm_throughput_predictive", "norm_throughput_baseline"},
                             {thr_p.norm_throughput, thr_b.norm_throughput});
        const fs::path cdf_p = dir / ("cdf_p_out_" + pred.label() + ".csv");
        const fs::path cdf_t = dir / ("cdf_throughput_" + pred.label() + ".csv");
        io::write_cdf_csv(cdf_p, empirical_cdf(out_p.p_out));
        io::write_cdf_csv(cdf_t, empirical_cdf(thr_p.norm_throughput));
        rec.artifacts.insert(rec.artifacts.end(), {outage, thr, cdf_p, cdf_t});
        summary["methods"][pred.label()] = method_summary(out_p.p_out, thr_p.norm_throughput, c.epsilon);

        // The baseline does not depend on delta; report it once.
        if (!baseline_done) {
            const fs::path bp = dir / "cdf_p_out_baseline.csv";
            const fs::path bt = dir / "cdf_throughput_baseline.csv";
            io::write_cdf_csv(bp, empirical_cdf(out_b.p_out));
            io::write_cdf_csv(bt, empirical_cdf(thr_b.norm_throughput));
            rec.artifacts.insert(rec.artifacts.end(), {bp, bt});
            summary["methods"]["baseline"] = method_summary(out_b.p_out, thr_b.norm_throughput, c.epsilon);
            baseline_done = true;
        }
    }
    write_json(dir / files::evaluation_summary, summary);
    rec.artifacts.push_back(dir / files::evaluation_summary);
    rec.seconds = seconds_since(t0);
    record_stage(dir, config, rec);
    return rec;
}

StageRecord cmd_meta(const RunConfig& config) {
    config.validate();
    const auto t0 = Clock::now();
    const fs::path dir = prepare_output_dir(config);
    CampaignConfig c = config.campaign;
    c.threads = thread_count(config);
    StageRecord rec;
    rec.stage = "meta";
    for (const char* label : {"scenario.truth", "scenario.grid", "scenario.test"}) {
        seed_for(config, rec, label);
    }

    const Scenario scenario = prepare_scenario(c);
    const CampaignResult result = estimate_meta_probability(scenario, c);

    json summary{{"epsilon", c.epsilon},
                 {"realizations", c.realizations},
                 {"grid_points", scenario.grid.size()},
                 {"methods", json::object()}};
    for (std::size_t k = 0; k < result.reports.size(); ++k) {
        const MetaReport& report = result.reports[k];
        const MethodPairs& pairs = result.pairs[k];
        std::vector<double> counts(report.exceed_count.begin(), report.exceed_count.end());
        const fs::path table = dir / ("meta_" + report.label + ".csv");
        const fs::path cdf_meta = dir / ("cdf_meta_" + report.label + ".csv");
        const fs::path cdf_p = dir / ("cdf_meta_p_out_" + report.label + ".csv");
        const fs::path cdf_t = dir / ("cdf_meta_throughput_" + report.label + ".csv");
        io::write_grid_table(table, report.grid, {"exceed_count", "meta_prob"}, {counts, report.meta_prob});
        io::write_cdf_csv(cdf_meta, empirical_cdf(report.meta_prob));
        io::write_cdf_csv(cdf_p, empirical_cdf(pairs.p_out));
        io::write_cdf_csv(cdf_t, empirical_cdf(pairs.norm_throughput));
        rec.artifacts.insert(rec.artifacts.end(), {table, cdf_meta, cdf_p, cdf_t});

        json m = method_summary(pairs.p_out, pairs.norm_throughput, c.epsilon);
        m["delta"] = report.delta;
        m["median_meta_prob"] = median(report.meta_prob);
        m["max_meta_prob"] = *std::max_element(report.meta_prob.begin(), report.meta_prob.end());
        summary["methods"][report.label] = m;
    }

    std::string hp = "realization,signal_var,corr_dist_m,noise_var\n";
    for (std::size_t m = 0; m < result.fitted.size(); ++m) {
        const GpHyperparams& h = result.fitted[m];
        hp += std::to_string(m) + "," + io::format_double(h.signal_var) + "," +
              io::format_double(h.corr_dist) + "," + io::format_double(h.noise_var) + "\n";
    }
    io::write_text(dir / files::meta_hyperparams, hp);
    write_json(dir / files::meta_summary, summary);
    rec.artifacts.push_back(dir / files::meta_hyperparams);
    rec.artifacts.push_back(dir / files::meta_summary);
    rec.seconds = seconds_since(t0);
    record_stage(dir, config, rec);
    return rec;
}

std::vector<StageRecord> cmd_run_all(const RunConfig& config) {
    return {cmd_synth(config), cmd_build_map(config), cmd_select(config), cmd_evaluate(config),
            cmd_meta(config)};
}

std::vector<StageRecord> run_command(const std::string& name, const RunConfig& config) {
    if (name == "synth") return {cmd_synth(config)};
    if (name == "build-map") return {cmd_build_map(config)};
    if (name == "select") return {cmd_select(config)};
    if (name == "evaluate") return {cmd_evaluate(config)};
    if (name == "meta") return {cmd_meta(config)};
    if (name == "run-all") return cmd_run_all(config);
    throw ConfigError("unknown command '" + name + "'");
}

}  // namespace radiomap::app
