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

#include "leosim/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace leosim
{

double db_to_linear(double value_db)
{
    return std::pow(10.0, value_db / 10.0);
}

double linear_to_db(double value_linear)
{
    if (!(value_linear > 0.0))
        throw std::invalid_argument("linear_to_db: value must be > 0");
    return 10.0 * std::log10(value_linear);
}

void Scenario::validate() const
{
    auto fail = [](const std::string &msg) { throw std::invalid_argument("scenario: " + msg); };

    if (user_count < 1)
        fail("user_count must be >= 1 (got " + std::to_string(user_count) + ")");
    if (!(altitude_m > 0.0))
        fail("altitude must be > 0 m (got " + std::to_string(altitude_m) + ")");
    if (!(carrier_frequency_hz > 0.0))
        fail("carrier_frequency must be > 0 Hz (got " + std::to_string(carrier_frequency_hz) + ")");
    if (antenna_count < 1)
        fail("antenna_count must be >= 1 (got " + std::to_string(antenna_count) + ")");
    if (!(antenna_spacing_m > 0.0))
        fail("antenna_spacing must be > 0 m (got " + std::to_string(antenna_spacing_m) + ")");
    if (!std::isfinite(sat_gain_dbi))
        fail("sat_gain must be finite");
    if (!std::isfinite(user_gain_dbi))
        fail("user_gain must be finite");
    if (!std::isfinite(noise_power_dbw))
        fail("noise_power must be finite");
    if (!std::isfinite(transmit_power_dbw))
        fail("transmit_power must be finite");
    if (user_ground_offsets_m.size() != static_cast<std::size_t>(user_count))
        fail("user offsets must list exactly user_count entries (got " +
             std::to_string(user_ground_offsets_m.size()) + " for " + std::to_string(user_count) +
             " users)");
    for (double d : user_ground_offsets_m)
        if (!(d >= 0.0) || !std::isfinite(d))
            fail("user offsets must be finite and >= 0 m (got " + std::to_string(d) + ")");
}

Scenario default_scenario()
{
    return Scenario{};
}

UserGeometry user_geometry(const Scenario &scenario, int user_index)
{
    if (user_index < 0 || user_index >= scenario.user_count)
        throw std::invalid_argument("user_geometry: user index out of range (got " +
                                    std::to_string(user_index) + " for " +
                                    std::to_string(scenario.user_count) + " users)");

    const double offset = scenario.user_ground_offsets_m[static_cast<std::size_t>(user_index)];
    const double slant = std::hypot(scenario.altitude_m, offset);

    UserGeometry g;
    g.slant_distance_m = slant;
    g.aod_cosine = offset / slant;
    g.phase_rad = 2.0 * std::numbers::pi * std::fmod(slant / scenario.wavelength_m(), 1.0);
    return g;
}

} // namespace leosim
