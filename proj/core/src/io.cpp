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

#include "radiomap/io.hpp"

#include <array>
#include <bit>
#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "radiomap/errors.hpp"

namespace radiomap::io {

using nlohmann::json;

static_assert(std::endian::native == std::endian::little,
              "binary SNR matrices are written in native little-endian order");

std::string format_double(double v) {
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return buf.data();
}

namespace {

std::string fixed6(double v) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.6f", v);
    return buf.data();
}

void require_exists(const fs::path& path) {
    if (!fs::exists(path)) throw FileNotFound("file not found: " + path.string());
}

std::ofstream open_out(const fs::path& path, std::ios::openmode mode = std::ios::out) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, mode | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    return out;
}

void finish(std::ofstream& out, const fs::path& path) {
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& s, const fs::path& path) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || errno == ERANGE) {
        throw FormatError("malformed number '" + s + "' in " + path.string());
    }
    return v;
}

void expect_header(const CsvTable& t, const std::vector<std::string>& expected,
                   const fs::path& path) {
    if (t.header != expected) {
        std::string want;
        for (const auto& h : expected) want += (want.empty() ? "" : ",") + h;
        throw FormatError("unexpected header in " + path.string() + " (want " + want + ")");
    }
}

LocationSet locations_from(const CsvTable& t, const Region& region, const fs::path& path) {
    LocationSet out;
    out.region = region;
    out.points.reserve(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.rows[i][0] != static_cast<double>(i)) {
            throw FormatError("non-sequential index in " + path.string());
        }
        out.points.push_back({t.rows[i][1], t.rows[i][2]});
    }
    return out;
}

std::vector<double> column(const CsvTable& t, std::size_t c) {
    std::vector<double> out;
    out.reserve(t.rows.size());
    for (const auto& row : t.rows) out.push_back(row[c]);
    return out;
}

json read_json(const fs::path& path) {
    require_exists(path);
    try {
        return json::parse(read_text(path));
    } catch (const json::exception& e) {
        throw FormatError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

template <typename T>
T json_field(const json& j, const char* key, const fs::path& path) {
    if (!j.contains(key)) throw FormatError(std::string("missing '") + key + "' in " + path.string());
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw FormatError(std::string("field '") + key + "' has the wrong type in " + path.string());
    }
}

}  // namespace

void write_text(const fs::path& path, const std::string& text) {
    auto out = open_out(path, std::ios::out | std::ios::binary);
    out << text;
    finish(out, path);
}

std::string read_text(const fs::path& path) {
    require_exists(path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CsvTable read_numeric_csv(const fs::path& path) {
    require_exists(path);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty CSV: " + path.string());
    t.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != t.header.size()) {
            throw FormatError("ragged row in " + path.string());
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(parse_double(c, path));
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_locations_csv(const fs::path& path, const LocationSet& set) {
    auto out = open_out(path);
    out << "index,x_m,y_m\n";
    for (std::size_t i = 0; i < set.size(); ++i) {
        out << i << ',' << fixed6(set[i].x) << ',' << fixed6(set[i].y) << '\n';
    }
    finish(out, path);
}

LocationSet read_locations_csv(const fs::path& path, const Region& region) {
    const CsvTable t = read_numeric_csv(path);
    expect_header(t, {"index", "x_m", "y_m"}, path);
    return locations_from(t, region, path);
}

namespace {
constexpr std::array<char, 8> kSnrMagic{'R', 'M', 'S', 'N', 'R', 'v', '1', '\0'};
}

void write_snr_matrix(const fs::path& path, const SnrDataset& data) {
    auto out = open_out(path, std::ios::out | std::ios::binary);
    const std::uint64_t rows = data.size();
    const std::uint64_t cols = data.n_samples;
    out.write(kSnrMagic.data(), kSnrMagic.size());
    out.write(reinterpret_cast<const char*>(&rows), sizeof rows);
    out.write(reinterpret_cast<const char*>(&cols), sizeof cols);
    out.write(reinterpret_cast<const char*>(data.samples.data()),
              static_cast<std::streamsize>(data.samples.size() * sizeof(double)));
    finish(out, path);
}

SnrDataset read_snr_matrix(const fs::path& path, LocationSet locations) {
    require_exists(path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::array<char, 8> magic{};
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    in.read(magic.data(), magic.size());
    in.read(reinterpret_cast<char*>(&rows), sizeof rows);
    in.read(reinterpret_cast<char*>(&cols), sizeof cols);
    if (!in || magic != kSnrMagic) throw FormatError("not an SNR matrix: " + path.string());
    if (rows != locations.size()) {
        throw FormatError("SNR matrix has " + std::to_string(rows) + " rows but " +
                          std::to_string(locations.size()) + " locations were given");
    }
    SnrDataset data;
    data.locations = std::move(locations);
    data.n_samples = cols;
    data.samples.resize(rows * cols);
    in.read(reinterpret_cast<char*>(data.samples.data()),
            static_cast<std::streamsize>(data.samples.size() * sizeof(double)));
    if (!in) throw FormatError("truncated SNR matrix: " + path.string());
    return data;
}

void write_ground_truth_csv(const fs::path& path, const GroundTruth& truth) {
    auto out = open_out(path);
    out << "index,x_m,y_m,mean_snr_db,kfactor_db\n";
    for (std::size_t i = 0; i < truth.size(); ++i) {
        out << i << ',' << fixed6(truth.locations[i].x) << ',' << fixed6(truth.locations[i].y)
            << ',' << format_double(truth.mean_snr_db[i]) << ','
            << format_double(truth.kfactor_db[i]) << '\n';
    }
    finish(out, path);
}

void write_quantiles(const fs::path& csv, const fs::path& sidecar, const QuantileDataset& qd) {
    auto out = open_out(csv);
    out << "index,x_m,y_m,q_hat_log,rho_hat\n";
    for (std::size_t i = 0; i < qd.size(); ++i) {
        out << i << ',' << fixed6(qd.locations[i].x) << ',' << fixed6(qd.locations[i].y) << ','
            << format_double(qd.q_hat[i]) << ',' << format_double(qd.rho_hat[i]) << '\n';
    }
    finish(out, csv);
    const json j{{"epsilon", qd.epsilon}, {"rank", qd.rank}, {"q_bar", qd.q_bar}, {"s", qd.s}};
    write_text(sidecar, j.dump(2) + "\n");
}

QuantileDataset read_quantiles(const fs::path& csv, const fs::path& sidecar, const Region& region) {
    const CsvTable t = read_numeric_csv(csv);
    expect_header(t, {"index", "x_m", "y_m", "q_hat_log", "rho_hat"}, csv);
    const json j = read_json(sidecar);
    QuantileDataset qd;
    qd.locations = locations_from(t, region, csv);
    qd.q_hat = column(t, 3);
    qd.rho_hat = column(t, 4);
    qd.epsilon = json_field<double>(j, "epsilon", sidecar);
    qd.rank = json_field<std::size_t>(j, "rank", sidecar);
    qd.q_bar = json_field<double>(j, "q_bar", sidecar);
    qd.s = json_field<double>(j, "s", sidecar);
    return qd;
}

void write_predictive_map(const fs::path& csv, const fs::path& sidecar, const PredictiveMap& map) {
    auto out = open_out(csv);
    out << "index,x_m,y_m,mean_rho,var_rho\n";
    for (std::size_t i = 0; i < map.size(); ++i) {
        out << i << ',' << fixed6(map.grid[i].x) << ',' << fixed6(map.grid[i].y) << ','
            << format_double(map.mean[i]) << ',' << format_double(map.var[i]) << '\n';
    }
    finish(out, csv);
    const json j{{"signal_var", map.hyperparams.signal_var},
                 {"corr_dist_m", map.hyperparams.corr_dist},
                 {"noise_var", map.hyperparams.noise_var},
                 {"q_bar", map.q_bar},
                 {"s", map.s}};
    write_text(sidecar, j.dump(2) + "\n");
}

PredictiveMap read_predictive_map(const fs::path& csv, const fs::path& sidecar,
                                  const Region& region) {
    const CsvTable t = read_numeric_csv(csv);
    expect_header(t, {"index", "x_m", "y_m", "mean_rho", "var_rho"}, csv);
    const json j = read_json(sidecar);
    PredictiveMap map;
    map.grid = locations_from(t, region, csv);
    map.mean = column(t, 3);
    map.var = column(t, 4);
    map.hyperparams.signal_var = json_field<double>(j, "signal_var", sidecar);
    map.hyperparams.corr_dist = json_field<double>(j, "corr_dist_m", sidecar);
    map.hyperparams.noise_var = json_field<double>(j, "noise_var", sidecar);
    map.q_bar = json_field<double>(j, "q_bar", sidecar);
    map.s = json_field<double>(j, "s", sidecar);
    return map;
}

void write_rate_pair(const fs::path& csv, const fs::path& sidecar, const RatePair& rates) {
    if (rates.predictive.size() != rates.grid.size() || rates.baseline.size() != rates.grid.size()) {
        throw GridMismatch("rate columns differ in length from the grid");
    }
    auto out = open_out(csv);
    out << "index,x_m,y_m,rate_predictive,rate_baseline\n";
    for (std::size_t i = 0; i < rates.grid.size(); ++i) {
        out << i << ',' << fixed6(rates.grid[i].x) << ',' << fixed6(rates.grid[i].y) << ','
            << format_double(rates.predictive[i]) << ',' << format_double(rates.baseline[i])
            << '\n';
    }
    finish(out, csv);
    const json j{{"epsilon", rates.epsilon}, {"delta", rates.delta}};
    write_text(sidecar, j.dump(2) + "\n");
}

RatePair read_rate_pair(const fs::path& csv, const fs::path& sidecar, const Region& region) {
    const CsvTable t = read_numeric_csv(csv);
    expect_header(t, {"index", "x_m", "y_m", "rate_predictive", "rate_baseline"}, csv);
    const json j = read_json(sidecar);
    RatePair r;
    r.grid = locations_from(t, region, csv);
    r.predictive = column(t, 3);
    r.baseline = column(t, 4);
    r.epsilon = json_field<double>(j, "epsilon", sidecar);
    r.delta = json_field<double>(j, "delta", sidecar);
    return r;
}

void write_grid_table(const fs::path& path, const LocationSet& grid,
                      const std::vector<std::string>& names,
                      const std::vector<std::vector<double>>& columns) {
    if (names.size() != columns.size()) throw InvalidArgument("column names and data differ");
    for (const auto& c : columns) {
        if (c.size() != grid.size()) throw GridMismatch("table column length differs from grid");
    }
    auto out = open_out(path);
    out << "index,x_m,y_m";
    for (const auto& n : names) out << ',' << n;
    out << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << i << ',' << fixed6(grid[i].x) << ',' << fixed6(grid[i].y);
        for (const auto& c : columns) out << ',' << format_double(c[i]);
        out << '\n';
    }
    finish(out, path);
}

void write_cdf_csv(const fs::path& path, const EmpiricalCdf& cdf) {
    auto out = open_out(path);
    out << "value,cum_prob\n";
    for (std::size_t i = 0; i < cdf.values.size(); ++i) {
        out << format_double(cdf.values[i]) << ',' << format_double(cdf.cum_prob[i]) << '\n';
    }
    finish(out, path);
}

}  // namespace radiomap::io
