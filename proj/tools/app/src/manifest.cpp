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

#include "radiomap/app/manifest.hpp"

#include <json.hpp>

#include <algorithm>

#include "radiomap/app/digest.hpp"
#include "radiomap/errors.hpp"
#include "radiomap/io.hpp"

namespace radiomap::app {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kSeedScheme =
    "seed(label, i) = splitmix64(splitmix64(master_seed ^ fnv1a64(label)) + i); "
    "per-location SNR streams use index = location row; realization m uses index = m "
    "with labels realization.locations, realization.field, realization.snr, realization.fit";

json to_json(const RunManifest& m) {
    json artifacts = json::array();
    for (const ArtifactEntry& a : m.artifacts) {
        artifacts.push_back({{"path", a.path}, {"sha256", a.sha256}, {"bytes", a.bytes}});
    }
    return json{{"tool", m.tool},
                {"version", m.version},
                {"config", json::parse(m.config_json)},
                {"config_digest", m.config_digest},
                {"master_seed", m.master_seed},
                {"seed_scheme", m.seed_scheme},
                {"seeds", m.seeds},
                {"artifacts", artifacts},
                {"timings_s", m.timings_s}};
}

RunManifest from_json(const json& j) {
    RunManifest m;
    m.tool = j.at("tool").get<std::string>();
    m.version = j.at("version").get<std::string>();
    m.config_json = j.at("config").dump();
    m.config_digest = j.at("config_digest").get<std::string>();
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.seed_scheme = j.at("seed_scheme").get<std::string>();
    m.seeds = j.at("seeds").get<std::map<std::string, std::uint64_t>>();
    for (const json& a : j.at("artifacts")) {
        m.artifacts.push_back({a.at("path").get<std::string>(), a.at("sha256").get<std::string>(),
                               a.at("bytes").get<std::uintmax_t>()});
    }
    m.timings_s = j.at("timings_s").get<std::map<std::string, double>>();
    return m;
}

}  // namespace

RunManifest read_manifest(const fs::path& out_dir) {
    const std::string text = io::read_text(out_dir / kManifestFile);
    try {
        return from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw FormatError("malformed manifest " + (out_dir / kManifestFile).string() + ": " + e.what());
    }
}

RunManifest record_stage(const fs::path& out_dir, const RunConfig& config, const StageRecord& stage) {
    const std::string digest = config_digest(config);
    RunManifest m;
    if (fs::exists(out_dir / kManifestFile)) {
        m = read_manifest(out_dir);
        if (m.config_digest != digest || m.master_seed != config.campaign.master_seed) m = RunManifest{};
    }
    m.tool = kToolName;
    m.version = kToolVersion;
    m.config_json = config_to_json(config);
    m.config_digest = digest;
    m.master_seed = config.campaign.master_seed;
    m.seed_scheme = kSeedScheme;
    for (const auto& [label, seed] : stage.seeds) m.seeds[label] = seed;
    for (const fs::path& p : stage.artifacts) {
        ArtifactEntry e;
        e.path = p.lexically_relative(out_dir).generic_string();
        if (e.path.empty() || e.path.starts_with("..")) e.path = p.generic_string();
        e.sha256 = sha256_file(p);
        e.bytes = fs::file_size(p);
        auto it = std::find_if(m.artifacts.begin(), m.artifacts.end(),
                               [&](const ArtifactEntry& a) { return a.path == e.path; });
        if (it != m.artifacts.end()) {
            *it = e;
        } else {
            m.artifacts.push_back(e);
        }
    }
    std::sort(m.artifacts.begin(), m.artifacts.end(),
              [](const ArtifactEntry& a, const ArtifactEntry& b) { return a.path < b.path; });
    m.timings_s[stage.stage] = stage.seconds;
    io::write_text(out_dir / kManifestFile, to_json(m).dump(2) + "\n");
    return m;
}

ManifestCheck verify_manifest(const fs::path& out_dir) {
    const RunManifest m = read_manifest(out_dir);
    ManifestCheck check;
    for (const ArtifactEntry& a : m.artifacts) {
        ++check.checked;
        const fs::path p = out_dir / a.path;
        if (!fs::exists(p) || fs::file_size(p) != a.bytes || sha256_file(p) != a.sha256) {
            check.mismatches.push_back(a.path);
        }
    }
    return check;
}

}  // namespace radiomap::app
