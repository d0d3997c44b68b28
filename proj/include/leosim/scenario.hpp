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

#include <cstddef>
#include <vector>

namespace leosim
{

constexpr double kSpeedOfLight = 299792458.0; // m/s

double db_to_linear(double value_db);
double linear_to_db(double value_linear);

// Physical description of one downlink snapshot: a satellite at altitude
// `altitude_m` serving `user_count` single-antenna ground users with a
// uniform linear array of `antenna_count` elements. User ground offsets are
// measured from the sub-satellite point along the array axis; user 0 sits at
// the sub-satellite point and the remaining users are displaced by
// user_ground_offsets_m.
struct Scenario
{
    int user_count = 2;
    double altitude_m = 600e3;
    double carrier_frequency_hz = 2e9;
    int antenna_count = 6;
    double antenna_spacing_m = 0.075;
    double sat_gain_dbi = 16.0;
    double user_gain_dbi = 0.0;
    double noise_power_dbw = -122.0;
    double transmit_power_dbw = 20.0;
    std::vector<double> user_ground_offsets_m = {0.0, 0.0};

    double wavelength_m() const { return kSpeedOfLight / carrier_frequency_hz; }
    double noise_power_w() const { return db_to_linear(noise_power_dbw); }
    double transmit_power_w() const { return db_to_linear(transmit_power_dbw); }
    double sat_gain_linear() const { return db_to_linear(sat_gain_dbi); }
    double user_gain_linear() const { return db_to_linear(user_gain_dbi); }

    // Throws std::invalid_argument naming the offending field and bound.
    void validate() const;
};

// Baseline two-user setup: 600 km altitude, 2 GHz carrier, 6 antennas at
// 7.5 cm spacing, 16 dBi satellite gain, 0 dBi user gain, -122 dBW noise
// power, 20 dBW transmit power.
Scenario default_scenario();

// Per-user line-of-sight geometry under a flat-ground approximation:
// slant distance sqrt(d0^2 + D^2), angle-of-departure cosine D / slant, and
// the propagation phase 2*pi*frac(slant / lambda).
struct UserGeometry
{
    double slant_distance_m = 0.0;
    double aod_cosine = 0.0;
    double phase_rad = 0.0;
};

// Geometry for user `user_index` (0-based). Throws std::invalid_argument if
// the index is out of range.
UserGeometry user_geometry(const Scenario &scenario, int user_index);

} // namespace leosim
