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

#include "leosim/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace leosim
{

CVector steering_vector(const Scenario &scenario, double eta)
{
    const int n_ant = scenario.antenna_count;
    const double spacing_ratio = scenario.antenna_spacing_m / scenario.wavelength_m();

    CVector a(static_cast<std::size_t>(n_ant));
    for (int n = 1; n <= n_ant; ++n)
    {
        const double phase = -std::numbers::pi * spacing_ratio * (n_ant + 1 - 2 * n) * eta;
        a[static_cast<std::size_t>(n - 1)] = std::polar(1.0, phase);
    }
    return a;
}

CVector channel_vector(const Scenario &scenario, const UserGeometry &geometry)
{
    if (!(geometry.slant_distance_m > 0.0))
        throw std::invalid_argument("channel_vector: slant distance must be > 0");

    const double amplitude = std::sqrt(scenario.user_gain_linear() * scenario.sat_gain_linear()) *
                             scenario.wavelength_m() /
                             (4.0 * std::numbers::pi * geometry.slant_distance_m);
    const Complex gain = amplitude * std::polar(1.0, -geometry.phase_rad);

    CVector h = steering_vector(scenario, geometry.aod_cosine);
    for (Complex &x : h)
        x *= gain;
    return h;
}

CVector apply_aod_error(const Scenario &scenario, const CVector &true_row, double epsilon)
{
    if (true_row.size() != static_cast<std::size_t>(scenario.antenna_count))
        throw std::invalid_argument("apply_aod_error: row length does not match antenna count");

    const CVector shift = steering_vector(scenario, epsilon);
    CVector out(true_row.size());
    for (std::size_t i = 0; i < true_row.size(); ++i)
        out[i] = true_row[i] * shift[i];
    return out;
}

std::vector<double> draw_epsilons(const ErrorModel &model, int user_count, SplitMix64 &rng)
{
    if (!(model.delta_eps >= 0.0))
        throw std::invalid_argument("draw_epsilons: delta_eps must be >= 0");
    if (user_count < 1)
        throw std::invalid_argument("draw_epsilons: user_count must be >= 1");

    std::vector<double> eps(static_cast<std::size_t>(user_count));
    for (double &e : eps)
        e = rng.next_symmetric(model.delta_eps);
    return eps;
}

double correlation(const CVector &h1, const CVector &h2)
{
    if (h1.size() != h2.size())
        throw std::invalid_argument("correlation: length mismatch");

    const double n1 = vector_norm(h1);
    const double n2 = vector_norm(h2);
    if (n1 == 0.0 || n2 == 0.0)
        throw std::invalid_argument("correlation: zero vector");

    return std::abs(inner_product(h1, h2)) / (n1 * n2);
}

ChannelSet build_channels(const Scenario &scenario, std::span<const double> epsilons)
{
    if (epsilons.size() != static_cast<std::size_t>(scenario.user_count))
        throw std::invalid_argument("build_channels: need one epsilon per user (got " +
                                    std::to_string(epsilons.size()) + ")");

    const std::size_t n_ant = static_cast<std::size_t>(scenario.antenna_count);
    ChannelSet set;
    set.true_h = CMatrix(static_cast<std::size_t>(scenario.user_count), n_ant);
    set.estimated_h = CMatrix(static_cast<std::size_t>(scenario.user_count), n_ant);
    set.epsilons.assign(epsilons.begin(), epsilons.end());

    for (int k = 0; k < scenario.user_count; ++k)
    {
        const CVector h = channel_vector(scenario, user_geometry(scenario, k));
        const CVector h_est = apply_aod_error(scenario, h, epsilons[static_cast<std::size_t>(k)]);
        for (std::size_t n = 0; n < n_ant; ++n)
        {
            set.true_h(static_cast<std::size_t>(k), n) = h[n];
            set.estimated_h(static_cast<std::size_t>(k), n) = h_est[n];
        }
    }
    return set;
}

} // namespace leosim
