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

#include "leosim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "leosim/precoding.hpp"

namespace leosim
{

namespace
{

Scheme scheme_of(SchemeKind kind)
{
    switch (kind)
    {
    case SchemeKind::kSdma:
        return Scheme::kSdma;
    case SchemeKind::kOma:
        return Scheme::kOma;
    case SchemeKind::kRsmaFixed:
    case SchemeKind::kRsmaOpt:
        return Scheme::kRsma;
    }
    throw std::invalid_argument("unknown scheme kind");
}

// Sample mean and standard error of the mean from running sums accumulated
// in iteration order. The n*mean^2 subtraction can round slightly negative
// for near-constant samples; clamp to zero.
PointStats finalize_stats(double sum, double sum_sq, int n)
{
    PointStats s;
    s.iterations = n;
    s.mean_rate = sum / n;
    if (n > 1)
    {
        const double var_num = sum_sq - static_cast<double>(n) * s.mean_rate * s.mean_rate;
        const double variance = var_num > 0.0 ? var_num / (n - 1) : 0.0;
        s.std_error = std::sqrt(variance / n);
    }
    return s;
}

} // namespace

std::string scheme_label(const SchemeSpec &spec)
{
    switch (spec.kind)
    {
    case SchemeKind::kSdma:
        return "SDMA";
    case SchemeKind::kOma:
        return "OMA";
    case SchemeKind::kRsmaFixed:
        return "RSMA";
    case SchemeKind::kRsmaOpt:
        return "RSMA-opt";
    }
    throw std::invalid_argument("unknown scheme kind");
}

void SweepConfig::validate() const
{
    auto fail = [](const std::string &msg) { throw std::invalid_argument("sweep: " + msg); };

    if (distance_grid_m.empty())
        fail("distance_grid must not be empty");
    for (std::size_t i = 0; i < distance_grid_m.size(); ++i)
    {
        if (!(distance_grid_m[i] > 0.0))
            fail("distance_grid entries must be > 0 m (got " +
                 std::to_string(distance_grid_m[i]) + ")");
        if (i > 0 && !(distance_grid_m[i] > distance_grid_m[i - 1]))
            fail("distance_grid must be strictly increasing");
    }
    if (alpha_grid.empty())
        fail("alpha_grid must not be empty");
    for (std::size_t i = 0; i < alpha_grid.size(); ++i)
    {
        if (!(alpha_grid[i] >= 0.0 && alpha_grid[i] <= 1.0))
            fail("alpha_grid entries must lie in [0, 1] (got " + std::to_string(alpha_grid[i]) +
                 ")");
        if (i > 0 && !(alpha_grid[i] >= alpha_grid[i - 1]))
            fail("alpha_grid must be sorted");
    }
    if (iterations < 1)
        fail("iterations must be >= 1 (got " + std::to_string(iterations) + ")");
    if (!(delta_eps >= 0.0))
        fail("delta_eps must be >= 0 (got " + std::to_string(delta_eps) + ")");
    if (schemes.empty())
        fail("schemes must not be empty");
    for (const SchemeSpec &s : schemes)
        if (s.kind == SchemeKind::kRsmaFixed && !(s.alpha >= 0.0 && s.alpha <= 1.0))
            fail("fixed RSMA alpha must lie in [0, 1] (got " + std::to_string(s.alpha) + ")");
}

std::vector<double> default_distance_grid()
{
    constexpr double lo = 500.0;     // 0.5 km
    constexpr double hi = 200000.0;  // 200 km
    constexpr std::size_t n = 80;

    std::vector<double> grid(n);
    const double step = (std::log(hi) - std::log(lo)) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = std::exp(std::log(lo) + static_cast<double>(i) * step);
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<double> default_alpha_grid()
{
    std::vector<double> grid(101);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = static_cast<double>(i) / 100.0;
    return grid;
}

SweepConfig default_sweep_config()
{
    SweepConfig cfg;
    cfg.distance_grid_m = default_distance_grid();
    cfg.alpha_grid = default_alpha_grid();
    return cfg;
}

Scenario scenario_at_distance(const Scenario &scenario, double distance_m)
{
    Scenario s = scenario;
    for (std::size_t k = 1; k < s.user_ground_offsets_m.size(); ++k)
        s.user_ground_offsets_m[k] = distance_m;
    return s;
}

std::vector<double> iteration_epsilons(std::uint64_t seed, double distance_m,
                                       std::uint64_t iteration, int user_count, double delta_eps)
{
    const std::uint64_t key = std::bit_cast<std::uint64_t>(distance_m);
    SplitMix64 rng(derive_stream(seed, key, iteration));
    return draw_epsilons(ErrorModel{delta_eps}, user_count, rng);
}

PointStats evaluate_point(const Scenario &scenario, double distance_m, Scheme scheme, double alpha,
                          double delta_eps, int iterations, std::uint64_t seed)
{
    if (iterations < 1)
        throw std::invalid_argument("evaluate_point: iterations must be >= 1");
    if (!(delta_eps >= 0.0))
        throw std::invalid_argument("evaluate_point: delta_eps must be >= 0");

    const Scenario sc = scenario_at_distance(scenario, distance_m);
    sc.validate();

    // Perfect knowledge makes every realization identical.
    const int n = delta_eps == 0.0 ? 1 : iterations;
    const double noise = sc.noise_power_w();

    double sum = 0.0;
    double sum_sq = 0.0;
    for (int j = 0; j < n; ++j)
    {
        const std::vector<double> eps =
            iteration_epsilons(seed, distance_m, static_cast<std::uint64_t>(j), sc.user_count,
                               delta_eps);
        const ChannelSet ch = build_channels(sc, eps);
        const PrecoderSet p = build_precoders(scheme, ch.estimated_h, sc, alpha);
        const double rate = evaluate_rates(ch.true_h, p, noise).sum_rate;
        sum += rate;
        sum_sq += rate * rate;
    }
    return finalize_stats(sum, sum_sq, n);
}

PointReport evaluate_point_report(const Scenario &scenario, double distance_m, Scheme scheme,
                                  double alpha, double delta_eps, int iterations,
                                  std::uint64_t seed)
{
    if (iterations < 1)
        throw std::invalid_argument("evaluate_point_report: iterations must be >= 1");

    const Scenario sc = scenario_at_distance(scenario, distance_m);
    sc.validate();

    const int n = delta_eps == 0.0 ? 1 : iterations;
    const double noise = sc.noise_power_w();
    const std::size_t k_users = static_cast<std::size_t>(sc.user_count);

    PointReport report;
    report.iterations = n;
    report.mean_breakdown.scheme = scheme;
    report.mean_breakdown.alpha = alpha;
    report.mean_breakdown.private_rates.assign(k_users, 0.0);
    if (scheme == Scheme::kRsma)
        report.mean_breakdown.common_rates.assign(k_users, 0.0);

    double sum = 0.0;
    double sum_sq = 0.0;
    for (int j = 0; j < n; ++j)
    {
        const std::vector<double> eps =
            iteration_epsilons(seed, distance_m, static_cast<std::uint64_t>(j), sc.user_count,
                               delta_eps);
        const ChannelSet ch = build_channels(sc, eps);
        const PrecoderSet p = build_precoders(scheme, ch.estimated_h, sc, alpha);
        const RateBreakdown r = evaluate_rates(ch.true_h, p, noise);
        for (std::size_t k = 0; k < k_users; ++k)
        {
            report.mean_breakdown.private_rates[k] += r.private_rates[k];
            if (scheme == Scheme::kRsma)
                report.mean_breakdown.common_rates[k] += r.common_rates[k];
        }
        sum += r.sum_rate;
        sum_sq += r.sum_rate * r.sum_rate;
    }

    for (std::size_t k = 0; k < k_users; ++k)
    {
        report.mean_breakdown.private_rates[k] /= n;
        if (scheme == Scheme::kRsma)
            report.mean_breakdown.common_rates[k] /= n;
    }
    const PointStats stats = finalize_stats(sum, sum_sq, n);
    report.mean_breakdown.sum_rate = stats.mean_rate;
    report.std_error = stats.std_error;

    if (sc.user_count >= 2)
    {
        const CVector h0 = channel_vector(sc, user_geometry(sc, 0));
        const CVector h1 = channel_vector(sc, user_geometry(sc, sc.user_count - 1));
        report.rho = correlation(h0, h1);
    }
    else
    {
        report.rho = 1.0;
    }
    return report;
}

AlphaSearchResult alpha_search(const Scenario &scenario, double distance_m,
                               std::span<const double> alpha_grid, double delta_eps,
                               int iterations, std::uint64_t seed)
{
    if (alpha_grid.empty())
        throw std::invalid_argument("alpha_search: alpha grid must not be empty");
    if (iterations < 1)
        throw std::invalid_argument("alpha_search: iterations must be >= 1");

    const Scenario sc = scenario_at_distance(scenario, distance_m);
    sc.validate();

    const int n = delta_eps == 0.0 ? 1 : iterations;
    const double noise = sc.noise_power_w();
    const std::size_t n_alpha = alpha_grid.size();

    // Common random numbers: one channel realization per iteration, shared
    // by every alpha, with per-alpha sums accumulated in iteration order so
    // each mean is bit-identical to a standalone evaluate_point call.
    std::vector<double> sums(n_alpha, 0.0);
    std::vector<double> sums_sq(n_alpha, 0.0);
    for (int j = 0; j < n; ++j)
    {
        const std::vector<double> eps =
            iteration_epsilons(seed, distance_m, static_cast<std::uint64_t>(j), sc.user_count,
                               delta_eps);
        const ChannelSet ch = build_channels(sc, eps);
        for (std::size_t a = 0; a < n_alpha; ++a)
        {
            const PrecoderSet p = build_precoders(Scheme::kRsma, ch.estimated_h, sc, alpha_grid[a]);
            const double rate = evaluate_rates(ch.true_h, p, noise).sum_rate;
            sums[a] += rate;
            sums_sq[a] += rate * rate;
        }
    }

    AlphaSearchResult best;
    best.alpha_opt = alpha_grid[0];
    best.mean_rate = sums[0] / n;
    std::size_t best_idx = 0;
    for (std::size_t a = 1; a < n_alpha; ++a)
    {
        const double mean = sums[a] / n;
        if (mean > best.mean_rate) // ties keep the smaller alpha
        {
            best.mean_rate = mean;
            best.alpha_opt = alpha_grid[a];
            best_idx = a;
        }
    }
    const PointStats stats = finalize_stats(sums[best_idx], sums_sq[best_idx], n);
    best.mean_rate = stats.mean_rate;
    best.std_error = stats.std_error;
    best.iterations = n;
    return best;
}

SweepResult run_sweep(const SweepConfig &config, const Scenario &scenario, int worker_count)
{
    config.validate();
    scenario.validate();
    if (worker_count < 0)
        throw std::invalid_argument("run_sweep: worker_count must be >= 0");

    const std::size_t n_dist = config.distance_grid_m.size();
    const std::size_t n_schemes = config.schemes.size();

    SweepResult result;
    result.rows.resize(n_dist * n_schemes);

    // Each sweep point is computed independently and written to its fixed
    // slot, so the result is identical for any worker count.
    auto compute_point = [&](std::size_t i) {
        const double distance = config.distance_grid_m[i];
        const Scenario sc = scenario_at_distance(scenario, distance);

        double rho = 1.0;
        if (sc.user_count >= 2)
        {
            const CVector h0 = channel_vector(sc, user_geometry(sc, 0));
            const CVector h1 = channel_vector(sc, user_geometry(sc, sc.user_count - 1));
            rho = correlation(h0, h1);
        }

        for (std::size_t s = 0; s < n_schemes; ++s)
        {
            const SchemeSpec &spec = config.schemes[s];
            SweepRow row;
            row.distance_m = distance;
            row.kind = spec.kind;
            row.rho = rho;
            row.seed = config.seed;

            if (spec.kind == SchemeKind::kRsmaOpt)
            {
                const AlphaSearchResult r =
                    alpha_search(scenario, distance, config.alpha_grid, config.delta_eps,
                                 config.iterations, config.seed);
                row.alpha = r.alpha_opt;
                row.mean_rate = r.mean_rate;
                row.std_error = r.std_error;
                row.iterations = r.iterations;
            }
            else
            {
                const double alpha = spec.kind == SchemeKind::kRsmaFixed ? spec.alpha : 1.0;
                const PointStats r = evaluate_point(scenario, distance, scheme_of(spec.kind),
                                                    alpha, config.delta_eps, config.iterations,
                                                    config.seed);
                row.alpha = alpha;
                row.mean_rate = r.mean_rate;
                row.std_error = r.std_error;
                row.iterations = r.iterations;
            }
            result.rows[i * n_schemes + s] = row;
        }
    };

    std::size_t workers = worker_count == 0
                              ? static_cast<std::size_t>(std::thread::hardware_concurrency())
                              : static_cast<std::size_t>(worker_count);
    if (workers == 0)
        workers = 1;
    workers = std::min(workers, n_dist);

    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n_dist; ++i)
            compute_point(i);
    }
    else
    {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n_dist; i = next.fetch_add(1))
                    compute_point(i);
            });
        for (std::thread &t : pool)
            t.join();
    }
    return result;
}

} // namespace leosim
