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

#include <vector>

#include "leosim/precoding.hpp"

namespace leosim
{

// Achievable rates for one realization, all in bps/Hz. The signal model uses
// the true channel while the precoders were built from the estimate, so
// estimation error shows up as residual interference. private_rates holds
// each user's own-stream rate (for OMA this includes the 1/K time share, so
// sum_rate is always the plain sum plus the common part). common_rates is
// filled for RSMA only: the shared stream must be decodable by every user,
// so the common contribution to sum_rate is min_k common_rates[k].
struct RateBreakdown
{
    Scheme scheme = Scheme::kSdma;
    double alpha = 1.0;
    std::vector<double> private_rates;
    std::vector<double> common_rates;
    double sum_rate = 0.0;
};

// SDMA: each user decodes its own stream, all other private streams are
// interference. R_k = log2(1 + |h_k w_k|^2 / (sigma^2 + sum_{i != k} |h_k w_i|^2)).
RateBreakdown sdma_sum_rate(const CMatrix &true_h, const CMatrix &private_w, double noise_power_w);

// OMA: orthogonal time shares, no inter-user interference, prelog 1/K.
// R_k = (1/K) log2(1 + |h_k w_k|^2 / sigma^2).
RateBreakdown oma_sum_rate(const CMatrix &true_h, const CMatrix &private_w, double noise_power_w);

// RSMA with a single common stream decoded first (treating every private
// stream as interference) and removed perfectly before each user decodes its
// own private stream under residual inter-user interference.
RateBreakdown rsma_rates(const CMatrix &true_h, const PrecoderSet &precoders,
                         double noise_power_w);

// Dispatch on precoders.scheme.
RateBreakdown evaluate_rates(const CMatrix &true_h, const PrecoderSet &precoders,
                             double noise_power_w);

} // namespace leosim
