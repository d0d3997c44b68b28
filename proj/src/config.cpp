// SPDX-License-Identifier: Apache-2.0
//
// leosim - multibeam LEO satellite downlink precoding simulator
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

#include "leosim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace leosim
{

namespace
{

std::string trim(const std::string &s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s)
    {
        if (c == sep)
        {
            parts.push_back(cur);
            cur.clear();
        }
        else
        {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

// Splits "12.5 km" into the numeric prefix and a (possibly empty) trailing
// unit word.
std::pair<double, std::string> parse_number_with_suffix(const std::string &text)
{
    const std::string t = trim(text);
    if (t.empty())
        throw ConfigError("empty value");

    const char *begin = t.c_str();
    char *end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin)
        throw ConfigError("not a number: '" + t + "'");

    const std::string suffix = trim(std::string(end));
    for (char c : suffix)
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw ConfigError("bad unit suffix in '" + t + "'");
    return {value, suffix};
}

} // namespace

RunConfig default_run_config()
{
    RunConfig cfg;
    cfg.scenario = default_scenario();
    cfg.sweep = default_sweep_config();
    return cfg;
}

double parse_length_m(const std::string &text)
{
    const auto [value, suffix] = parse_number_with_suffix(text);
    if (suffix.empty() || suffix == "m")
        return value;
    if (suffix == "km")
        return value * 1e3;
    if (suffix == "cm")
        return value * 1e-2;
    if (suffix == "mm")
        return value * 1e-3;
    throw ConfigError("unknown length unit '" + suffix + "' (use m, km, cm, mm)");
}

double parse_frequency_hz(const std::string &text)
{
    const auto [value, suffix] = parse_number_with_suffix(text);
    if (suffix.empty() || suffix == "Hz")
        return value;
    if (suffix == "kHz")
        return value * 1e3;
    if (suffix == "MHz")
        return value * 1e6;
    if (suffix == "GHz")
        return value * 1e9;
    throw ConfigError("unknown frequency unit '" + suffix + "' (use Hz, kHz, MHz, GHz)");
}

double parse_db(const std::string &text, const std::string &expected_suffix)
{
    const auto [value, suffix] = parse_number_with_suffix(text);
    if (suffix.empty() || suffix == expected_suffix)
        return value;
    throw ConfigError("unknown unit '" + suffix + "' (expected " + expected_suffix + ")");
}

double parse_real(const std::string &text)
{
    const auto [value, suffix] = parse_number_with_suffix(text);
    if (!suffix.empty())
        throw ConfigError("unexpected unit '" + suffix + "'");
    return value;
}

int parse_int(const std::string &text)
{
    const double v = parse_real(text);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError("expected an integer, got '" + trim(text) + "'");
    return i;
}

std::uint64_t parse_uint64(const std::string &text)
{
    const std::string t = trim(text);
    if (t.empty() || t[0] == '-')
        throw ConfigError("expected a non-negative integer, got '" + t + "'");
    try
    {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(t, &pos);
        if (pos != t.size())
            throw ConfigError("expected a non-negative integer, got '" + t + "'");
        return v;
    }
    catch (const std::invalid_argument &)
    {
        throw ConfigError("expected a non-negative integer, got '" + t + "'");
    }
    catch (const std::out_of_range &)
    {
        throw ConfigError("integer out of range: '" + t + "'");
    }
}

std::vector<double> parse_distance_grid(const std::string &text)
{
    const std::string t = trim(text);
    if (t.rfind("log:", 0) == 0 || t.rfind("lin:", 0) == 0)
    {
        const std::vector<std::string> parts = split(t, ':');
        if (parts.size() != 4)
            throw ConfigError("grid spec must be " + parts[0] + ":<lo>:<hi>:<n>");
        const double lo = parse_length_m(parts[1]);
        const double hi = parse_length_m(parts[2]);
        const int n = parse_int(parts[3]);
        if (!(lo > 0.0) || !(hi > lo))
            throw ConfigError("grid bounds must satisfy 0 < lo < hi");
        if (n < 2)
            throw ConfigError("grid needs at least 2 points");

        std::vector<double> grid(static_cast<std::size_t>(n));
        if (parts[0] == "log")
        {
            const double step = (std::log(hi) - std::log(lo)) / (n - 1);
            for (int i = 0; i < n; ++i)
                grid[static_cast<std::size_t>(i)] = std::exp(std::log(lo) + i * step);
        }
        else
        {
            const double step = (hi - lo) / (n - 1);
            for (int i = 0; i < n; ++i)
                grid[static_cast<std::size_t>(i)] = lo + i * step;
        }
        grid.front() = lo;
        grid.back() = hi;
        return grid;
    }

    std::vector<double> grid;
    for (const std::string &item : split(t, ','))
        grid.push_back(parse_length_m(item));
    return grid;
}

std::vector<double> parse_alpha_grid(const std::string &text)
{
    const std::string t = trim(text);
    if (t.rfind("step:", 0) == 0)
    {
        const double h = parse_real(t.substr(5));
        if (!(h > 0.0 && h <= 1.0))
            throw ConfigError("alpha step must lie in (0, 1]");
        const int n = static_cast<int>(std::lround(1.0 / h)) + 1;
        std::vector<double> grid(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            grid[static_cast<std::size_t>(i)] = std::min(1.0, i * h);
        grid.back() = 1.0;
        return grid;
    }

    std::vector<double> grid;
    for (const std::string &item : split(t, ','))
        grid.push_back(parse_real(item));
    return grid;
}

std::vector<SchemeSpec> parse_schemes(const std::string &text)
{
    std::vector<SchemeSpec> specs;
    for (const std::string &item : split(trim(text), ','))
    {
        const std::string token = trim(item);
        if (token == "SDMA")
            specs.push_back({SchemeKind::kSdma, 1.0});
        else if (token == "OMA")
            specs.push_back({SchemeKind::kOma, 1.0});
        else if (token == "RSMA-opt")
            specs.push_back({SchemeKind::kRsmaOpt, 1.0});
        else if (token == "RSMA")
            specs.push_back({SchemeKind::kRsmaFixed, 1.0});
        else if (token.rfind("RSMA:", 0) == 0)
            specs.push_back({SchemeKind::kRsmaFixed, parse_real(token.substr(5))});
        else
            throw ConfigError("unknown scheme '" + token +
                              "' (use SDMA, OMA, RSMA[:<alpha>], RSMA-opt)");
    }
    return specs;
}

std::string scheme_token(const SchemeSpec &spec)
{
    if (spec.kind == SchemeKind::kRsmaFixed)
        return "RSMA:" + format_g17(spec.alpha);
    return scheme_label(spec);
}

void apply_setting(RunConfig &config, const std::string &key, const std::string &value)
{
    const std::string k = trim(key);
    Scenario &sc = config.scenario;
    SweepConfig &sw = config.sweep;

    if (k == "user_count")
    {
        sc.user_count = parse_int(value);
        sc.user_ground_offsets_m.assign(
            sc.user_count > 0 ? static_cast<std::size_t>(sc.user_count) : 0, 0.0);
    }
    else if (k == "altitude")
        sc.altitude_m = parse_length_m(value);
    else if (k == "carrier_frequency")
        sc.carrier_frequency_hz = parse_frequency_hz(value);
    else if (k == "antenna_count")
        sc.antenna_count = parse_int(value);
    else if (k == "antenna_spacing")
        sc.antenna_spacing_m = parse_length_m(value);
    else if (k == "sat_gain")
        sc.sat_gain_dbi = parse_db(value, "dBi");
    else if (k == "user_gain")
        sc.user_gain_dbi = parse_db(value, "dBi");
    else if (k == "noise_power")
        sc.noise_power_dbw = parse_db(value, "dBW");
    else if (k == "transmit_power")
        sc.transmit_power_dbw = parse_db(value, "dBW");
    else if (k == "distance_grid")
        sw.distance_grid_m = parse_distance_grid(value);
    else if (k == "alpha_grid")
        sw.alpha_grid = parse_alpha_grid(value);
    else if (k == "iterations")
        sw.iterations = parse_int(value);
    else if (k == "delta_eps")
        sw.delta_eps = parse_real(value);
    else if (k == "seed")
        sw.seed = parse_uint64(value);
    else if (k == "schemes")
        sw.schemes = parse_schemes(value);
    else
        throw ConfigError("unknown config key '" + k + "'");
}

void load_config_file(RunConfig &config, const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file '" + path + "'");

    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        const std::string stripped = trim(line);
        if (stripped.empty())
            continue;

        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        try
        {
            apply_setting(config, stripped.substr(0, eq), stripped.substr(eq + 1));
        }
        catch (const ConfigError &e)
        {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
}

std::string format_g17(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string rates_csv(const SweepResult &result)
{
    std::string out = "D_km,scheme,alpha,mean_rate_bps_hz,std_error,n_iter,seed\n";
    for (const SweepRow &row : result.rows)
    {
        out += format_g17(row.distance_m / 1000.0);
        out += ',';
        out += scheme_label({row.kind, row.alpha});
        out += ',';
        out += format_g17(row.alpha);
        out += ',';
        out += format_g17(row.mean_rate);
        out += ',';
        out += format_g17(row.std_error);
        out += ',';
        out += std::to_string(row.iterations);
        out += ',';
        out += std::to_string(row.seed);
        out += '\n';
    }
    return out;
}

std::string correlation_csv(const std::vector<std::pair<double, double>> &rows)
{
    std::string out = "D_km,rho\n";
    for (const auto &[distance_m, rho] : rows)
    {
        out += format_g17(distance_m / 1000.0);
        out += ',';
        out += format_g17(rho);
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw IoError("cannot read '" + path + "'");
    return ss.str();
}

void write_text_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out)
        throw IoError("cannot write '" + path + "'");
}

std::string manifest_json(const RunConfig &config, const std::string &command,
                          const std::string &output_path)
{
    nlohmann::json j;
    j["tool"] = "leosim";
    j["version"] = "0.1.0";
    j["command"] = command;
    j["output"] = output_path;

    nlohmann::json sc;
    sc["user_count"] = config.scenario.user_count;
    sc["altitude_m"] = config.scenario.altitude_m;
    sc["carrier_frequency_hz"] = config.scenario.carrier_frequency_hz;
    sc["antenna_count"] = config.scenario.antenna_count;
    sc["antenna_spacing_m"] = config.scenario.antenna_spacing_m;
    sc["sat_gain_dbi"] = config.scenario.sat_gain_dbi;
    sc["user_gain_dbi"] = config.scenario.user_gain_dbi;
    sc["noise_power_dbw"] = config.scenario.noise_power_dbw;
    sc["transmit_power_dbw"] = config.scenario.transmit_power_dbw;
    j["scenario"] = sc;

    nlohmann::json sw;
    sw["distance_grid_m"] = config.sweep.distance_grid_m;
    sw["alpha_grid"] = config.sweep.alpha_grid;
    sw["iterations"] = config.sweep.iterations;
    sw["delta_eps"] = config.sweep.delta_eps;
    sw["seed"] = config.sweep.seed;
    std::vector<std::string> schemes;
    for (const SchemeSpec &s : config.sweep.schemes)
        schemes.push_back(scheme_token(s));
    sw["schemes"] = schemes;
    j["sweep"] = sw;

    return j.dump(2) + "\n";
}

RunConfig config_from_manifest(const std::string &json_text, std::string *command_out)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(json_text);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw ConfigError(std::string("manifest is not valid JSON: ") + e.what());
    }

    RunConfig cfg = default_run_config();
    try
    {
        if (command_out != nullptr)
            *command_out = j.at("command").get<std::string>();

        const nlohmann::json &sc = j.at("scenario");
        cfg.scenario.user_count = sc.at("user_count").get<int>();
        cfg.scenario.altitude_m = sc.at("altitude_m").get<double>();
        cfg.scenario.carrier_frequency_hz = sc.at("carrier_frequency_hz").get<double>();
        cfg.scenario.antenna_count = sc.at("antenna_count").get<int>();
        cfg.scenario.antenna_spacing_m = sc.at("antenna_spacing_m").get<double>();
        cfg.scenario.sat_gain_dbi = sc.at("sat_gain_dbi").get<double>();
        cfg.scenario.user_gain_dbi = sc.at("user_gain_dbi").get<double>();
        cfg.scenario.noise_power_dbw = sc.at("noise_power_dbw").get<double>();
        cfg.scenario.transmit_power_dbw = sc.at("transmit_power_dbw").get<double>();
        cfg.scenario.user_ground_offsets_m.assign(
            cfg.scenario.user_count > 0 ? static_cast<std::size_t>(cfg.scenario.user_count) : 0,
            0.0);

        const nlohmann::json &sw = j.at("sweep");
        cfg.sweep.distance_grid_m = sw.at("distance_grid_m").get<std::vector<double>>();
        cfg.sweep.alpha_grid = sw.at("alpha_grid").get<std::vector<double>>();
        cfg.sweep.iterations = sw.at("iterations").get<int>();
        cfg.sweep.delta_eps = sw.at("delta_eps").get<double>();
        cfg.sweep.seed = sw.at("seed").get<std::uint64_t>();
        cfg.sweep.schemes.clear();
        for (const auto &tok : sw.at("schemes"))
        {
            const std::vector<SchemeSpec> specs = parse_schemes(tok.get<std::string>());
            cfg.sweep.schemes.insert(cfg.sweep.schemes.end(), specs.begin(), specs.end());
        }
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ConfigError(std::string("manifest is missing or has malformed fields: ") + e.what());
    }
    return cfg;
}

} // namespace leosim
