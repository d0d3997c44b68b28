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

#include "leosim/rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leosim
{

namespace
{

// |h_k w_j|^2 for row k of H and column j of W.
double beam_gain(const CMatrix &h, std::size_t k, const CMatrix &w, std::size_t j)
{
    Complex s = 0.0;
    for (std::size_t n = 0; n < h.cols(); ++n)
        s += h(k, n) * w(n, j);
    return std::norm(s);
}

// |h_k w_c|^2 for the common-stream precoder.
double common_gain(const CMatrix &h, std::size_t k, const CVector &w_c)
{
    Complex s = 0.0;
    for (std::size_t n = 0; n < h.cols(); ++n)
        s += h(k, n) * w_c[n];
    return std::norm(s);
}

void check_dimensions(const CMatrix &true_h, const CMatrix &private_w, double noise_power_w)
{
    if (true_h.rows() == 0 || true_h.cols() == 0)
        throw std::invalid_argument("rates: empty channel matrix");
    if (private_w.rows() != true_h.cols() || private_w.cols() != true_h.rows())
        throw std::invalid_argument("rates: precoder must be N x K for a K x N channel");
    if (!(noise_power_w > 0.0))
        throw std::invalid_argument("rates: noise power must be > 0");
}

} // namespace

RateBreakdown sdma_sum_rate(const CMatrix &true_h, const CMatrix &private_w, double noise_power_w)
{
    check_dimensions(true_h, private_w, noise_power_w);
    const std::size_t k_users = true_h.rows();

    RateBreakdown out;
    out.scheme = Scheme::kSdma;
    out.private_rates.resize(k_users);
    for (std::size_t k = 0; k < k_users; ++k)
    {
        double signal = 0.0;
        double interference = 0.0;
        for (std::size_t j = 0; j < k_users; ++j)
        {
            const double g = beam_gain(true_h, k, private_w, j);
            if (j == k)
                signal = g;
            else
                interference += g;
        }
        out.private_rates[k] = std::log2(1.0 + signal / (noise_power_w + interference));
        out.sum_rate += out.private_rates[k];
    }
    return out;
}

RateBreakdown oma_sum_rate(const CMatrix &true_h, const CMatrix &private_w, double noise_power_w)
{
    check_dimensions(true_h, private_w, noise_power_w);
    const std::size_t k_users = true_h.rows();
    const double share = 1.0 / static_cast<double>(k_users);

    RateBreakdown out;
    out.scheme = Scheme::kOma;
    out.private_rates.resize(k_users);
    for (std::size_t k = 0; k < k_users; ++k)
    {
        const double signal = beam_gain(true_h, k, private_w, k);
        out.private_rates[k] = share * std::log2(1.0 + signal / noise_power_w);
        out.sum_rate += out.private_rates[k];
    }
    return out;
}

RateBreakdown rsma_rates(const CMatrix &true_h, const PrecoderSet &precoders,
                         double noise_power_w)
{
    check_dimensions(true_h, precoders.private_w, noise_power_w);
    if (precoders.common_w.size() != true_h.cols())
        throw std::invalid_argument("rsma_rates: common precoder length must match antenna count");

    const std::size_t k_users = true_h.rows();

    RateBreakdown out;
    out.scheme = Scheme::kRsma;
    out.alpha = precoders.alpha;
    out.private_rates.resize(k_users);
    out.common_rates.resize(k_users);

    for (std::size_t k = 0; k < k_users; ++k)
    {
        double own_signal = 0.0;
        double cross = 0.0;
        for (std::size_t j = 0; j < k_users; ++j)
        {
            const double g = beam_gain(true_h, k, precoders.private_w, j);
            if (j == k)
                own_signal = g;
            else
                cross += g;
        }

        // Common stream decoded against all private streams, then removed.
        const double c_gain = common_gain(true_h, k, precoders.common_w);
        out.common_rates[k] =
            std::log2(1.0 + c_gain / (noise_power_w + own_signal + cross));
        out.private_rates[k] = std::log2(1.0 + own_signal / (noise_power_w + cross));
    }

    const double common_rate = *std::min_element(out.common_rates.begin(), out.common_rates.end());
    out.sum_rate = common_rate;
    for (double r : out.private_rates)
        out.sum_rate += r;
    return out;
}

RateBreakdown evaluate_rates(const CMatrix &true_h, const PrecoderSet &precoders,
                             double noise_power_w)
{
    switch (precoders.scheme)
    {
    case Scheme::kSdma:
        return sdma_sum_rate(true_h, precoders.private_w, noise_power_w);
    case Scheme::kOma:
        return oma_sum_rate(true_h, precoders.private_w, noise_power_w);
    case Scheme::kRsma:
        return rsma_rates(true_h, precoders, noise_power_w);
    }
    throw std::invalid_argument("evaluate_rates: unknown scheme");
}

} // namespace leosim
