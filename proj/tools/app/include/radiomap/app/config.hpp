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

#include <cstdint>
#include <filesystem>
#include <string>

#include "radiomap/campaign.hpp"

namespace radiomap::app {

enum class Scale { desk, paper };

Scale scale_from_string(const std::string& name);
const char* to_string(Scale s) noexcept;

/// Everything a command needs. The campaign block carries the experiment;
/// the remaining fields are plumbing.
struct RunConfig {
    Scale scale = Scale::desk;
    CampaignConfig campaign;
    std::filesystem::path output_dir = "radiomap_out";

    void validate() const;
};

/// Preset defaults. Desk: D = 100, N = 1e4, eps = 1e-2, M = 200, 21 x 21 grid.
/// Paper: D = 500, N = 1e5, eps = 1e-3, M = 1e4, 51 x 51 grid.
RunConfig preset(Scale scale);

/// Overlays a JSON config document onto `base`. Unknown keys and wrong types
/// raise ConfigError naming the offending key.
RunConfig apply_config_text(RunConfig base, const std::string& text);
RunConfig load_config(const std::filesystem::path& path, Scale scale);

/// Full config as pretty JSON (keys sorted, 17 significant digits).
std::string config_to_json(const RunConfig& config);

/// SHA-256 of the config with master_seed, threads and output_dir removed, so that
/// changing only the seed keeps the digest stable.
std::string config_digest(const RunConfig& config);

}  // namespace radiomap::app
