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

#include "leosim/linalg.hpp"
#include "leosim/scenario.hpp"

namespace leosim
{

enum class Scheme
{
    kSdma,
    kOma,
    kRsma,
};

// Transmit precoders for one channel realization. private_w is N x K (one
// column per user). common_w is the single shared-stream precoder and is
// empty for SDMA and OMA. The total radiated power |common_w|^2 + |W|_F^2
// always equals the scenario transmit power.
struct PrecoderSet
{
    Scheme scheme = Scheme::kSdma;
    double alpha = 1.0; // power-split exponent; meaningful for RSMA only
    CMatrix private_w;  // N x K
    CVector common_w;   // N, empty unless RSMA
};

// Regularized zero-forcing (MMSE) precoder from the estimated K x N channel:
//   W' = (H^H H + noise_power * K / power_budget * I)^{-1} H^H,
//   W  = sqrt(power_budget / tr(W'^H W')) * W'.
// Throws std::invalid_argument for a zero channel matrix or non-positive
// power budget / noise power.
CMatrix mmse_precoder(const CMatrix &estimated_h, double noise_power_w, double power_budget_w);

// Matched-filter precoder: column k is h_k^H scaled to power P/K. Throws
// std::invalid_argument if any channel row is zero.
CMatrix mrt_precoder(const CMatrix &estimated_h, double total_power_w);

// Common-stream precoder sqrt((P - P^alpha) / N) * ones(N). RSMA splits the
// budget as P^alpha for the private streams and the remainder for the common
// stream, so P >= 1 W is required whenever alpha < 1 (otherwise the split is
// negative). Throws std::invalid_argument on violation or alpha outside
// [0, 1].
CVector rsma_common_precoder(int antenna_count, double total_power_w, double alpha);

// Builds the full precoder set for one scheme:
//   SDMA: MMSE on the full budget, no common stream.
//   OMA:  matched filter, no common stream (rates apply the 1/K time share).
//   RSMA: MMSE on P^alpha for the privates plus the common-stream precoder.
PrecoderSet build_precoders(Scheme scheme, const CMatrix &estimated_h, const Scenario &scenario,
                            double alpha = 1.0);

// Total radiated power |common_w|^2 + |private_w|_F^2.
double total_power(const PrecoderSet &precoders);

} // namespace leosim
