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

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include "radiomap/app/commands.hpp"
#include "radiomap/app/config.hpp"
#include "radiomap/errors.hpp"

namespace {

std::string one_line(std::string s) {
    for (char& c : s) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
}

int report(const std::string& error_class, const std::string& message) {
    std::fprintf(stderr, "error: %s: %s\n", error_class.c_str(), one_line(message).c_str());
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace radiomap;

    CLI::App app{"GP quantile maps and outage-constrained rate selection", "radiomap"};
    app.set_version_flag("--version", std::string(app::kToolVersion));
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string config_path;
    std::string scale_name = "desk";
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<unsigned> threads;
    app.add_option("--config", config_path, "JSON config file overlaid on the scale preset");
    app.add_option("--scale", scale_name, "Preset: desk or paper")->check(CLI::IsMember({"desk", "paper"}));
    app.add_option("--seed", seed, "Master seed");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--threads", threads, "Worker threads (0 = all cores)");

    for (const char* name : {"synth", "build-map", "select", "evaluate", "meta", "run-all"}) {
        app.add_subcommand(name);
    }
    app.get_subcommand("synth")->description("Draw ground truth, training and test datasets");
    app.get_subcommand("build-map")->description("Estimate quantiles, fit the GP and predict on the grid");
    app.get_subcommand("select")->description("Select predictive and baseline rates per delta");
    app.get_subcommand("evaluate")->description("Outage, normalized throughput and CDFs on test data");
    app.get_subcommand("meta")->description("Meta-probability campaign over training realizations");
    app.get_subcommand("run-all")->description("Run every stage in order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report("ConfigError", e.what());
    }

    try {
        const app::Scale scale = app::scale_from_string(scale_name);
        app::RunConfig config =
            config_path.empty() ? app::preset(scale) : app::load_config(config_path, scale);
        if (seed) config.campaign.master_seed = *seed;
        if (out_dir) config.output_dir = *out_dir;
        if (threads) config.campaign.threads = *threads;
        config.validate();

        const std::string command = app.get_subcommands().front()->get_name();
        for (const app::StageRecord& stage : app::run_command(command, config)) {
            std::printf("%s: %zu artifacts in %.3f s\n", stage.stage.c_str(), stage.artifacts.size(),
                        stage.seconds);
        }
        std::printf("output: %s\n", config.output_dir.string().c_str());
        return 0;
    } catch (const Error& e) {
        return report(e.error_class(), e.what());
    } catch (const std::exception& e) {
        return report("InternalError", e.what());
    }
}
