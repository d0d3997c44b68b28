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
//
// Command-line front end. Subcommands:
//   correlation  channel correlation versus user separation (CSV)
//   rates        Monte Carlo sum-rate sweep (CSV)
//   point        one operating point, human-readable report
//   rerun        reproduce a previous run from its manifest
//
// Exit codes: 0 success, 1 configuration error, 2 runtime error, 3 I/O error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leosim/channel.hpp"
#include "leosim/config.hpp"
#include "leosim/experiment.hpp"

namespace
{

using namespace leosim;

struct CommonArgs
{
    std::string config_path;
    std::vector<std::string> settings;
    std::string output_path;
    int threads = 0;
};

void add_common_options(CLI::App *cmd, CommonArgs &args)
{
    cmd->add_option("-c,--config", args.config_path, "Config file (key = value lines)");
    cmd->add_option("-s,--set", args.settings, "Override one setting, e.g. -s seed=7")
        ->type_name("KEY=VALUE");
    cmd->add_option("-o,--output", args.output_path,
                    "Output file (default: stdout, no manifest)");
}

RunConfig resolve_config(const CommonArgs &args)
{
    RunConfig cfg = default_run_config();
    if (!args.config_path.empty())
        load_config_file(cfg, args.config_path);
    for (const std::string &setting : args.settings)
    {
        const std::size_t eq = setting.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects KEY=VALUE, got '" + setting + "'");
        apply_setting(cfg, setting.substr(0, eq), setting.substr(eq + 1));
    }
    cfg.scenario.validate();
    cfg.sweep.validate();
    return cfg;
}

void emit(const CommonArgs &args, const std::string &csv, const RunConfig &cfg,
          const std::string &command)
{
    if (args.output_path.empty())
    {
        std::cout << csv;
        return;
    }
    write_text_file(args.output_path, csv);
    const std::string manifest_path = args.output_path + ".manifest.json";
    write_text_file(manifest_path, manifest_json(cfg, command, args.output_path));
    std::cerr << "wrote " << args.output_path << " and " << manifest_path << "\n";
}

std::vector<std::pair<double, double>> correlation_rows(const RunConfig &cfg)
{
    std::vector<std::pair<double, double>> rows;
    rows.reserve(cfg.sweep.distance_grid_m.size());
    for (double d : cfg.sweep.distance_grid_m)
    {
        const Scenario sc = scenario_at_distance(cfg.scenario, d);
        const CVector h0 = channel_vector(sc, user_geometry(sc, 0));
        const CVector h1 = channel_vector(sc, user_geometry(sc, sc.user_count - 1));
        rows.emplace_back(d, correlation(h0, h1));
    }
    return rows;
}

int run_correlation(const CommonArgs &args)
{
    const RunConfig cfg = resolve_config(args);
    if (cfg.scenario.user_count < 2)
        throw ConfigError("correlation needs user_count >= 2");
    emit(args, correlation_csv(correlation_rows(cfg)), cfg, "correlation");
    return 0;
}

int run_rates(const CommonArgs &args)
{
    const RunConfig cfg = resolve_config(args);
    const SweepResult result = run_sweep(cfg.sweep, cfg.scenario, args.threads);
    emit(args, rates_csv(result), cfg, "rates");
    return 0;
}

struct PointArgs
{
    CommonArgs common;
    std::string distance_text;
    std::string scheme_text = "RSMA-opt";
    double alpha = 1.0;
    bool alpha_given = false;
};

int run_point(const PointArgs &args)
{
    const RunConfig cfg = resolve_config(args.common);
    const Scenario &base = cfg.scenario;
    const double distance_m = parse_length_m(args.distance_text);
    if (!(distance_m > 0.0))
        throw ConfigError("--distance must be > 0");

    std::vector<SchemeSpec> specs = parse_schemes(args.scheme_text);
    if (specs.size() != 1)
        throw ConfigError("--scheme expects exactly one scheme");
    SchemeSpec spec = specs.front();
    if (args.alpha_given)
    {
        if (spec.kind != SchemeKind::kRsmaFixed)
            throw ConfigError("--alpha applies to scheme RSMA only");
        spec.alpha = args.alpha;
    }

    const Scenario sc = scenario_at_distance(base, distance_m);
    const double p_w = sc.transmit_power_w();

    std::printf("leosim point report\n");
    std::printf("  scenario: %d users, %d antennas, altitude %s km, carrier %s GHz\n",
                sc.user_count, sc.antenna_count, format_g17(sc.altitude_m / 1e3).c_str(),
                format_g17(sc.carrier_frequency_hz / 1e9).c_str());
    std::printf("  transmit power %s W, noise power %s W\n", format_g17(p_w).c_str(),
                format_g17(sc.noise_power_w()).c_str());

    const UserGeometry far = user_geometry(sc, sc.user_count - 1);
    std::printf("  separation %s km, slant %s km\n", format_g17(distance_m / 1e3).c_str(),
                format_g17(far.slant_distance_m / 1e3).c_str());
    std::printf("  error model: delta_eps %s, iterations %d, seed %llu\n",
                format_g17(cfg.sweep.delta_eps).c_str(), cfg.sweep.iterations,
                static_cast<unsigned long long>(cfg.sweep.seed));

    double alpha = spec.alpha;
    if (spec.kind == SchemeKind::kRsmaOpt)
    {
        const AlphaSearchResult search =
            alpha_search(base, distance_m, cfg.sweep.alpha_grid, cfg.sweep.delta_eps,
                         cfg.sweep.iterations, cfg.sweep.seed);
        alpha = search.alpha_opt;
        std::printf("  alpha search over %zu grid points: alpha_opt = %s\n",
                    cfg.sweep.alpha_grid.size(), format_g17(alpha).c_str());
    }

    const Scheme scheme = spec.kind == SchemeKind::kSdma  ? Scheme::kSdma
                          : spec.kind == SchemeKind::kOma ? Scheme::kOma
                                                          : Scheme::kRsma;
    const PointReport report = evaluate_point_report(base, distance_m, scheme, alpha,
                                                     cfg.sweep.delta_eps, cfg.sweep.iterations,
                                                     cfg.sweep.seed);

    std::printf("  channel correlation (perfect knowledge): %s\n",
                format_g17(report.rho).c_str());
    std::printf("  scheme %s", scheme_label(spec).c_str());
    if (scheme == Scheme::kRsma)
    {
        const double private_power = std::pow(p_w, alpha);
        std::printf(", alpha %s: common power %s W, private power %s W",
                    format_g17(alpha).c_str(), format_g17(p_w - private_power).c_str(),
                    format_g17(private_power).c_str());
    }
    std::printf("\n");

    const RateBreakdown &mean = report.mean_breakdown;
    if (!mean.common_rates.empty())
    {
        std::printf("  mean per-user common rate:  ");
        for (double r : mean.common_rates)
            std::printf("%s ", format_g17(r).c_str());
        std::printf("bps/Hz\n");
    }
    std::printf("  mean per-user private rate: ");
    for (double r : mean.private_rates)
        std::printf("%s ", format_g17(r).c_str());
    std::printf("bps/Hz\n");
    std::printf("  mean sum rate: %s bps/Hz (std error %s, %d iterations)\n",
                format_g17(mean.sum_rate).c_str(), format_g17(report.std_error).c_str(),
                report.iterations);
    return 0;
}

struct RerunArgs
{
    std::string manifest_path;
    std::string output_path;
    int threads = 0;
};

int run_rerun(const RerunArgs &args)
{
    std::string command;
    RunConfig cfg = config_from_manifest(read_text_file(args.manifest_path), &command);
    cfg.scenario.validate();
    cfg.sweep.validate();

    std::string csv;
    if (command == "rates")
    {
        const SweepResult result = run_sweep(cfg.sweep, cfg.scenario, args.threads);
        csv = rates_csv(result);
    }
    else if (command == "correlation")
    {
        csv = correlation_csv(correlation_rows(cfg));
    }
    else
    {
        throw ConfigError("manifest command '" + command + "' is not re-runnable");
    }

    if (args.output_path.empty())
        std::cout << csv;
    else
    {
        write_text_file(args.output_path, csv);
        std::cerr << "wrote " << args.output_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"leosim: multibeam LEO satellite downlink precoding simulator"};
    app.require_subcommand(1);

    CommonArgs correlation_args;
    CLI::App *correlation_cmd =
        app.add_subcommand("correlation", "Channel correlation versus user separation");
    add_common_options(correlation_cmd, correlation_args);

    CommonArgs rates_args;
    CLI::App *rates_cmd = app.add_subcommand("rates", "Monte Carlo sum-rate sweep");
    add_common_options(rates_cmd, rates_args);
    rates_cmd->add_option("-j,--threads", rates_args.threads,
                          "Worker threads (0 = hardware concurrency)");

    PointArgs point_args;
    CLI::App *point_cmd = app.add_subcommand("point", "Evaluate a single operating point");
    add_common_options(point_cmd, point_args.common);
    point_cmd->add_option("-D,--distance", point_args.distance_text, "User separation, e.g. 100km")
        ->required();
    point_cmd->add_option("--scheme", point_args.scheme_text,
                          "SDMA, OMA, RSMA[:<alpha>], or RSMA-opt (default)");
    point_cmd->add_option("--alpha", point_args.alpha, "Power-split exponent for scheme RSMA")
        ->check(CLI::Range(0.0, 1.0));

    RerunArgs rerun_args;
    CLI::App *rerun_cmd = app.add_subcommand("rerun", "Reproduce a run from its manifest");
    rerun_cmd->add_option("-m,--manifest", rerun_args.manifest_path, "Manifest JSON path")
        ->required();
    rerun_cmd->add_option("-o,--output", rerun_args.output_path,
                          "Output file (default: stdout)");
    rerun_cmd->add_option("-j,--threads", rerun_args.threads,
                          "Worker threads (0 = hardware concurrency)");

    try
    {
        app.parse(argc, argv);
        point_args.alpha_given = point_cmd->count("--alpha") > 0;

        if (correlation_cmd->parsed())
            return run_correlation(correlation_args);
        if (rates_cmd->parsed())
            return run_rates(rates_args);
        if (point_cmd->parsed())
            return run_point(point_args);
        if (rerun_cmd->parsed())
            return run_rerun(rerun_args);
        return 1;
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    catch (const leosim::IoError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    catch (const leosim::ConfigError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
