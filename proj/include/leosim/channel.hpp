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

#include <span>
#include <vector>

#include "leosim/linalg.hpp"
#include "leosim/rng.hpp"
#include "leosim/scenario.hpp"

namespace leosim
{

// Angle-of-departure estimation error: the receiver-side cosine seen by the
// transmitter is offset by an independent uniform draw in
// [-delta_eps, +delta_eps] per user. delta_eps = 0 models perfect knowledge.
struct ErrorModel
{
    double delta_eps = 0.0;
};

// True and estimated channel matrices for one realization, rows = users,
// columns = antennas, plus the error draws that produced the estimate.
struct ChannelSet
{
    CMatrix true_h;      // K x N
    CMatrix estimated_h; // K x N
    std::vector<double> epsilons;
};

// Uniform-linear-array steering vector for angle-of-departure cosine `eta`:
// element n in {1..N} carries phase -pi * (spacing/lambda) * (N + 1 - 2n) * eta,
// so the array is phase-centered and every entry has unit magnitude.
CVector steering_vector(const Scenario &scenario, double eta);

// Line-of-sight channel row for one user: free-space amplitude
// sqrt(G_user * G_sat) * lambda / (4 pi d), propagation phase e^{-j phi},
// times the steering vector at the user's angle-of-departure cosine.
CVector channel_vector(const Scenario &scenario, const UserGeometry &geometry);

// Transmitter-side channel estimate under an angle error of `epsilon`:
// element-wise product of the true row with the steering vector at epsilon.
// Preserves all element magnitudes. epsilon = 0 returns the input unchanged.
CVector apply_aod_error(const Scenario &scenario, const CVector &true_row, double epsilon);

// One error draw per user, uniform in [-delta_eps, +delta_eps). Throws
// std::invalid_argument if delta_eps < 0 or user_count < 1.
std::vector<double> draw_epsilons(const ErrorModel &model, int user_count, SplitMix64 &rng);

// Normalized channel correlation |<h1, h2>| / (|h1| |h2|) in [0, 1]. Throws
// std::invalid_argument on length mismatch or a zero vector.
double correlation(const CVector &h1, const CVector &h2);

// Builds the true K x N channel matrix from the scenario geometry and the
// estimated matrix from one epsilon per user.
ChannelSet build_channels(const Scenario &scenario, std::span<const double> epsilons);

} // namespace leosim
