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

#include "radiomap/app/config.hpp"

#include <json.hpp>

#include "radiomap/app/digest.hpp"
#include "radiomap/errors.hpp"
#include "radiomap/io.hpp"

namespace radiomap::app {

using nlohmann::json;

Scale scale_from_string(const std::string& name) {
    if (name == "desk") return Scale::desk;
    if (name == "paper") return Scale::paper;
    throw ConfigError("unknown scale '" + name + "' (expected desk or paper)");
}

const char* to_string(Scale s) noexcept { return s == Scale::desk ? "desk" : "paper"; }

RunConfig preset(Scale scale) {
    RunConfig c;
    c.scale = scale;
    CampaignConfig& k = c.campaign;
    k.region = {-50.0, 50.0, -50.0, 50.0};
    k.sampling.process = SamplingProcess::thomas;
    k.sampling.thomas = ThomasParams{};
    if (scale == Scale::desk) {
        k.sampling.count = 100;
        k.n_samples = 10000;
        k.epsilon = 1e-2;
        k.deltas = {1e-2, 1e-3};
        k.realizations = 200;
        k.n_test = 10000;
        k.grid_spacing = 5.0;
    } else {
        k.sampling.count = 500;
        k.n_samples = 100000;
        k.epsilon = 1e-3;
        k.deltas = {1e-1, 1e-3};
        k.realizations = 10000;
        k.n_test = 100000;
        k.grid_spacing = 2.0;
    }
    k.master_seed = 1;
    k.threads = 0;
    return c;
}

namespace {

json to_json(const RunConfig& c) {
    const CampaignConfig& k = c.campaign;
    const ThomasParams& t = k.sampling.thomas;
    const FitBounds& b = k.fit.bounds;
    return json{
        {"scale", to_string(c.scale)},
        {"region", {{"x_min", k.region.x_min}, {"x_max", k.region.x_max},
                    {"y_min", k.region.y_min}, {"y_max", k.region.y_max}}},
        {"sampling",
         {{"process", to_string(k.sampling.process)},
          {"count", k.sampling.count},
          {"thomas", {{"parent_rate", t.parent_rate}, {"daughter_mean", t.daughter_mean},
                      {"daughter_std", t.daughter_std}, {"sim_margin", t.sim_margin},
                      {"grid_spacing", t.grid_spacing}}}}},
        {"channel",
         {{"budget", {{"tx_power_dbm", k.budget.tx_power_dbm},
                      {"noise_power_dbm", k.budget.noise_power_dbm},
                      {"bandwidth_hz", k.budget.bandwidth_hz},
                      {"carrier_hz", k.budget.carrier_hz},
                      {"bs_x_m", k.budget.bs_position.x},
                      {"bs_y_m", k.budget.bs_position.y},
                      {"bs_height_m", k.budget.bs_height_m},
                      {"ue_height_m", k.budget.ue_height_m}}},
          {"pathloss", {{"k_db", k.pathloss.k_db}, {"eta", k.pathloss.eta}, {"d0_m", k.pathloss.d0_m}}},
          {"fields", {{"shadow_std_db", k.fields.shadow_std_db},
                      {"shadow_corr_dist_m", k.fields.shadow_corr_dist_m},
                      {"kfactor_mean_db", k.fields.kfactor_mean_db},
                      {"kfactor_std_db", k.fields.kfactor_std_db},
                      {"kfactor_corr_dist_m", k.fields.kfactor_corr_dist_m}}}}},
        {"quantile", {{"epsilon", k.epsilon}, {"n_samples", k.n_samples}}},
        {"gp",
         {{"bounds", {{"signal_var_min", b.signal_var_min}, {"signal_var_max", b.signal_var_max},
                      {"corr_dist_min", b.corr_dist_min}, {"corr_dist_max", b.corr_dist_max},
                      {"noise_var_min", b.noise_var_min}, {"noise_var_max", b.noise_var_max}}},
          {"n_starts", k.fit.n_starts},
          {"max_iterations", k.fit.max_iterations},
          {"f_tolerance", k.fit.f_tolerance}}},
        {"rate", {{"deltas", k.deltas}}},
        {"evaluation", {{"realizations", k.realizations},
                        {"n_test", k.n_test},
                        {"grid_spacing", k.grid_spacing}}},
        {"master_seed", k.master_seed},
        {"threads", k.threads},
        {"output_dir", c.output_dir.string()},
    };
}

bool same_kind(const json& a, const json& b) {
    if (a.is_number() && b.is_number()) {
        // Integers stay integers; floats accept any number.
        return !(a.is_number_integer() && b.is_number_float());
    }
    return a.type() == b.type();
}

void merge_checked(json& base, const json& overlay, const std::string& where) {
    if (!overlay.is_object()) throw ConfigError("expected an object at '" + where + "'");
    for (auto it = overlay.begin(); it != overlay.end(); ++it) {
        const std::string key = where.empty() ? it.key() : where + "." + it.key();
        if (!base.contains(it.key())) throw ConfigError("unknown config key '" + key + "'");
        json& slot = base[it.key()];
        if (slot.is_object()) {
            merge_checked(slot, it.value(), key);
        } else if (!same_kind(slot, it.value())) {
            throw ConfigError("config key '" + key + "' has the wrong type");
        } else if (slot.is_number_integer() && it.value().is_number_integer() &&
                   it.value().get<long long>() < 0) {
            throw ConfigError("config key '" + key + "' must be non-negative");
        } else {
            slot = it.value();
        }
    }
}

RunConfig from_json(const json& j) {
    RunConfig c;
    c.scale = scale_from_string(j["scale"].get<std::string>());
    CampaignConfig& k = c.campaign;
    const json& r = j["region"];
    k.region = {r["x_min"].get<double>(), r["x_max"].get<double>(), r["y_min"].get<double>(),
                r["y_max"].get<double>()};
    const json& s = j["sampling"];
    k.sampling.process = sampling_process_from_string(s["process"].get<std::string>());
    k.sampling.count = s["count"].get<std::size_t>();
    const json& t = s["thomas"];
    k.sampling.thomas.parent_rate = t["parent_rate"].get<double>();
    k.sampling.thomas.daughter_mean = t["daughter_mean"].get<double>();
    k.sampling.thomas.daughter_std = t["daughter_std"].get<double>();
    k.sampling.thomas.sim_margin = t["sim_margin"].get<double>();
    k.sampling.thomas.grid_spacing = t["grid_spacing"].get<double>();
    k.sampling.thomas.target_count = k.sampling.count;
    const json& bu = j["channel"]["budget"];
    k.budget.tx_power_dbm = bu["tx_power_dbm"].get<double>();
    k.budget.noise_power_dbm = bu["noise_power_dbm"].get<double>();
    k.budget.bandwidth_hz = bu["bandwidth_hz"].get<double>();
    k.budget.carrier_hz = bu["carrier_hz"].get<double>();
    k.budget.bs_position = {bu["bs_x_m"].get<double>(), bu["bs_y_m"].get<double>()};
    k.budget.bs_height_m = bu["bs_height_m"].get<double>();
    k.budget.ue_height_m = bu["ue_height_m"].get<double>();
    const json& pl = j["channel"]["pathloss"];
    k.pathloss = {pl["k_db"].get<double>(), pl["eta"].get<double>(), pl["d0_m"].get<double>()};
    const json& f = j["channel"]["fields"];
    k.fields = {f["shadow_std_db"].get<double>(), f["shadow_corr_dist_m"].get<double>(),
                f["kfactor_mean_db"].get<double>(), f["kfactor_std_db"].get<double>(),
                f["kfactor_corr_dist_m"].get<double>()};
    k.epsilon = j["quantile"]["epsilon"].get<double>();
    k.n_samples = j["quantile"]["n_samples"].get<std::size_t>();
    const json& gp = j["gp"];
    const json& b = gp["bounds"];
    k.fit.bounds = {b["signal_var_min"].get<double>(), b["signal_var_max"].get<double>(),
                    b["corr_dist_min"].get<double>(),  b["corr_dist_max"].get<double>(),
                    b["noise_var_min"].get<double>(),  b["noise_var_max"].get<double>()};
    k.fit.n_starts = gp["n_starts"].get<std::size_t>();
    k.fit.max_iterations = gp["max_iterations"].get<std::size_t>();
    k.fit.f_tolerance = gp["f_tolerance"].get<double>();
    k.deltas.clear();
    for (const json& d : j["rate"]["deltas"]) {
        if (!d.is_number()) throw ConfigError("rate.deltas must contain numbers");
        k.deltas.push_back(d.get<double>());
    }
    const json& e = j["evaluation"];
    k.realizations = e["realizations"].get<std::size_t>();
    k.n_test = e["n_test"].get<std::size_t>();
    k.grid_spacing = e["grid_spacing"].get<double>();
    k.master_seed = j["master_seed"].get<std::uint64_t>();
    k.threads = j["threads"].get<unsigned>();
    c.output_dir = j["output_dir"].get<std::string>();
    return c;
}

}  // namespace

void RunConfig::validate() const {
    campaign.validate();
    if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
}

RunConfig apply_config_text(RunConfig base, const std::string& text) {
    json overlay;
    try {
        overlay = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    json merged = to_json(base);
    // A scale key in the file selects the preset before the overlay is applied.
    if (overlay.is_object() && overlay.contains("scale")) {
        if (!overlay["scale"].is_string()) throw ConfigError("config key 'scale' has the wrong type");
        merged = to_json(preset(scale_from_string(overlay["scale"].get<std::string>())));
        merged["output_dir"] = base.output_dir.string();
    }
    merge_checked(merged, overlay, "");
    RunConfig out = from_json(merged);
    out.validate();
    return out;
}

RunConfig load_config(const std::filesystem::path& path, Scale scale) {
    return apply_config_text(preset(scale), io::read_text(path));
}

std::string config_to_json(const RunConfig& config) { return to_json(config).dump(2) + "\n"; }

std::string config_digest(const RunConfig& config) {
    json j = to_json(config);
    j.erase("master_seed");
    j.erase("output_dir");
    j.erase("threads");
    return sha256_hex(j.dump());
}

}  // namespace radiomap::app
