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

#include <filesystem>
#include <string>
#include <vector>

#include "radiomap/app/config.hpp"
#include "radiomap/app/manifest.hpp"

namespace radiomap::app {

// Artifact names inside the output directory.
namespace files {
inline constexpr const char* ground_truth = "ground_truth.csv";
inline constexpr const char* train_locations = "train_locations.csv";
inline constexpr const char* train_snr = "train_snr.bin";
inline constexpr const char* test_locations = "test_locations.csv";
inline constexpr const char* test_snr = "test_snr.bin";
inline constexpr const char* quantiles_csv = "quantiles.csv";
inline constexpr const char* quantiles_json = "quantiles.json";
inline constexpr const char* map_csv = "radio_map.csv";
inline constexpr const char* map_json = "radio_map.json";
inline constexpr const char* true_capacity = "true_capacity.csv";
inline constexpr const char* evaluation_summary = "evaluation_summary.json";
inline constexpr const char* meta_summary = "meta_summary.json";
inline constexpr const char* meta_hyperparams = "meta_hyperparams.csv";
}  // namespace files

/// Short decimal form of delta used in file names, e.g. 0.001.
std::string delta_tag(double delta);
std::string rates_csv_name(double delta);
std::string rates_json_name(double delta);

/// synth: training and test datasets from one ground-truth draw.
StageRecord cmd_synth(const RunConfig& config);
/// build-map: quantile estimation, hyperparameter fit, grid prediction.
StageRecord cmd_build_map(const RunConfig& config);
/// select: predictive and baseline rates, one file per delta.
StageRecord cmd_select(const RunConfig& config);
/// evaluate: outage, normalized throughput and their CDFs on the test data.
StageRecord cmd_evaluate(const RunConfig& config);
/// meta: meta-probability campaign over resampled training sets.
StageRecord cmd_meta(const RunConfig& config);
/// run-all: every stage above in order.
std::vector<StageRecord> cmd_run_all(const RunConfig& config);

/// Runs a command by its CLI name. Throws ConfigError for unknown names.
std::vector<StageRecord> run_command(const std::string& name, const RunConfig& config);

}  // namespace radiomap::app
