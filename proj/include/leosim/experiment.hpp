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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "leosim/channel.hpp"
#include "leosim/rates.hpp"
#include "leosim/scenario.hpp"

namespace leosim
{

// One scheme entry of a sweep. kRsmaFixed evaluates RSMA at `alpha`;
// kRsmaOpt searches the configured alpha grid at every sweep point.
enum class SchemeKind
{
    kSdma,
    kOma,
    kRsmaFixed,
    kRsmaOpt,
};

struct SchemeSpec
{
    SchemeKind kind = SchemeKind::kSdma;
    double alpha = 1.0; // used by kRsmaFixed only
};

std::string scheme_label(const SchemeSpec &spec);

// Sweep over user separation: every user except the first is placed at each
// grid offset in turn while user 0 stays at the sub-satellite point.
struct SweepConfig
{
    std::vector<double> distance_grid_m; // strictly increasing, > 0
    std::vector<double> alpha_grid;      // sorted, within [0, 1]
    int iterations = 10000;
    double delta_eps = 0.0;
    std::uint64_t seed = 1;
    std::vector<SchemeSpec> schemes = {
        {SchemeKind::kSdma, 1.0}, {SchemeKind::kOma, 1.0}, {SchemeKind::kRsmaOpt, 1.0}};

    // Throws std::invalid_argument naming the offending field and bound.
    void validate() const;
};

// 80 log-spaced offsets from 0.5 km to 200 km, endpoints exact.
std::vector<double> default_distance_grid();

// 0, 0.01, ..., 1 (101 points).
std::vector<double> default_alpha_grid();

SweepConfig default_sweep_config();

// One output row of a sweep: Monte Carlo mean sum rate and its standard
// error for one (offset, scheme) pair, plus the perfect-knowledge channel
// correlation at that offset. iterations records the count actually run
// (1 when delta_eps == 0, where every realization is identical).
struct SweepRow
{
    double distance_m = 0.0;
    SchemeKind kind = SchemeKind::kSdma;
    double alpha = 1.0; // alpha used (for kRsmaOpt: the optimum found)
    double mean_rate = 0.0;
    double std_error = 0.0;
    double rho = 0.0;
    int iterations = 0;
    std::uint64_t seed = 0;
};

struct SweepResult
{
    std::vector<SweepRow> rows;
};

// Scenario with every user except user 0 moved to `distance_m`.
Scenario scenario_at_distance(const Scenario &scenario, double distance_m);

// The per-iteration error draws. All Monte Carlo code obtains its epsilons
// through this function, from a stream keyed on (seed, offset bits,
// iteration index); results therefore never depend on evaluation order or
// worker count, and every scheme and alpha evaluated at the same sweep point
// sees the same error sequence (common random numbers).
std::vector<double> iteration_epsilons(std::uint64_t seed, double distance_m,
                                       std::uint64_t iteration, int user_count, double delta_eps);

struct PointStats
{
    double mean_rate = 0.0;
    double std_error = 0.0;
    int iterations = 0;
};

// Monte Carlo mean sum rate for one scheme at one offset. delta_eps == 0
// short-circuits to a single evaluation (std_error = 0).
PointStats evaluate_point(const Scenario &scenario, double distance_m, Scheme scheme, double alpha,
                          double delta_eps, int iterations, std::uint64_t seed);

// Mean of the full rate breakdown at one point, for reporting.
struct PointReport
{
    RateBreakdown mean_breakdown;
    double std_error = 0.0;
    int iterations = 0;
    double rho = 0.0;
};

PointReport evaluate_point_report(const Scenario &scenario, double distance_m, Scheme scheme,
                                  double alpha, double delta_eps, int iterations,
                                  std::uint64_t seed);

struct AlphaSearchResult
{
    double alpha_opt = 1.0;
    double mean_rate = 0.0;
    double std_error = 0.0;
    int iterations = 0;
};

// Exhaustive RSMA power-split search: evaluates every alpha in the grid
// against the Monte Carlo mean under common random numbers and returns the
// maximizer, smallest alpha winning ties. The mean reported for each alpha
// is bit-identical to evaluate_point at that alpha.
AlphaSearchResult alpha_search(const Scenario &scenario, double distance_m,
                               std::span<const double> alpha_grid, double delta_eps,
                               int iterations, std::uint64_t seed);

// Runs the full sweep, parallelized over sweep points. Row order, contents,
// and bit patterns are independent of worker_count (0 = hardware
// concurrency).
SweepResult run_sweep(const SweepConfig &config, const Scenario &scenario, int worker_count = 0);

} // namespace leosim
