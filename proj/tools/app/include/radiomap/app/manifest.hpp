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
#include <map>
#include <string>
#include <vector>

#include "radiomap/app/config.hpp"

namespace radiomap::app {

inline constexpr const char* kToolName = "radiomap";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kManifestFile = "manifest.json";

struct ArtifactEntry {
    std::string path;  // relative to the output directory
    std::string sha256;
    std::uintmax_t bytes = 0;
};

/// What one command produced.
struct StageRecord {
    std::string stage;
    std::map<std::string, std::uint64_t> seeds;  // label -> derived seed
    std::vector<std::filesystem::path> artifacts;
    double seconds = 0.0;
};

struct RunManifest {
    std::string tool;
    std::string version;
    std::string config_json;
    std::string config_digest;
    std::uint64_t master_seed = 0;
    std::string seed_scheme;
    std::map<std::string, std::uint64_t> seeds;
    std::vector<ArtifactEntry> artifacts;  // sorted by path
    std::map<std::string, double> timings_s;
};

/// Merges a stage into `<out>/manifest.json`. A manifest written for a
/// different config digest or seed is discarded first.
RunManifest record_stage(const std::filesystem::path& out_dir, const RunConfig& config,
                         const StageRecord& stage);

RunManifest read_manifest(const std::filesystem::path& out_dir);

struct ManifestCheck {
    std::size_t checked = 0;
    std::vector<std::string> mismatches;  // artifact paths whose digest or size differ
    bool ok() const noexcept { return mismatches.empty(); }
};

/// Re-hashes every listed artifact.
ManifestCheck verify_manifest(const std::filesystem::path& out_dir);

}  // namespace radiomap::app
