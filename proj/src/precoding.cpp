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

#include "leosim/precoding.hpp"

#include <cmath>
#include <stdexcept>

namespace leosim
{

CMatrix mmse_precoder(const CMatrix &estimated_h, double noise_power_w, double power_budget_w)
{
    if (!(power_budget_w > 0.0))
        throw std::invalid_argument("mmse_precoder: power budget must be > 0");
    if (!(noise_power_w > 0.0))
        throw std::invalid_argument("mmse_precoder: noise power must be > 0");
    if (frobenius_norm_squared(estimated_h) == 0.0)
        throw std::invalid_argument("mmse_precoder: zero channel matrix");

    const double k_users = static_cast<double>(estimated_h.rows());
    const double shift = noise_power_w * k_users / power_budget_w;

    const CMatrix h_herm = hermitian_transpose(estimated_h); // N x K
    const CMatrix gram = matmul(h_herm, estimated_h);        // N x N
    CMatrix w = solve_regularized(gram, shift, h_herm);      // N x K

    const double trace = frobenius_norm_squared(w);
    if (trace == 0.0)
        throw std::invalid_argument("mmse_precoder: zero channel matrix");

    const double scale = std::sqrt(power_budget_w / trace);
    CMatrix scaled(w.rows(), w.cols());
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j)
            scaled(i, j) = scale * w(i, j);
    return scaled;
}

CMatrix mrt_precoder(const CMatrix &estimated_h, double total_power_w)
{
    if (!(total_power_w > 0.0))
        throw std::invalid_argument("mrt_precoder: total power must be > 0");

    const std::size_t k_users = estimated_h.rows();
    const std::size_t n_ant = estimated_h.cols();
    const double per_user_amp = std::sqrt(total_power_w / static_cast<double>(k_users));

    CMatrix w(n_ant, k_users);
    for (std::size_t k = 0; k < k_users; ++k)
    {
        double norm_sq = 0.0;
        for (std::size_t n = 0; n < n_ant; ++n)
            norm_sq += std::norm(estimated_h(k, n));
        if (norm_sq == 0.0)
            throw std::invalid_argument("mrt_precoder: zero channel row");

        const double scale = per_user_amp / std::sqrt(norm_sq);
        for (std::size_t n = 0; n < n_ant; ++n)
            w(n, k) = scale * std::conj(estimated_h(k, n));
    }
    return w;
}

CVector rsma_common_precoder(int antenna_count, double total_power_w, double alpha)
{
    if (antenna_count < 1)
        throw std::invalid_argument("rsma_common_precoder: antenna count must be >= 1");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("rsma_common_precoder: alpha must lie in [0, 1]");
    if (!(total_power_w > 0.0))
        throw std::invalid_argument("rsma_common_precoder: total power must be > 0");

    const double common_power = total_power_w - std::pow(total_power_w, alpha);
    if (common_power < 0.0)
        throw std::invalid_argument(
            "rsma_common_precoder: total power must be >= 1 W when alpha < 1 "
            "(P^alpha would exceed P)");

    const double amp = std::sqrt(common_power / static_cast<double>(antenna_count));
    return CVector(static_cast<std::size_t>(antenna_count), Complex(amp, 0.0));
}

PrecoderSet build_precoders(Scheme scheme, const CMatrix &estimated_h, const Scenario &scenario,
                            double alpha)
{
    const double power = scenario.transmit_power_w();
    const double noise = scenario.noise_power_w();

    PrecoderSet set;
    set.scheme = scheme;
    set.alpha = alpha;

    switch (scheme)
    {
    case Scheme::kSdma:
        set.private_w = mmse_precoder(estimated_h, noise, power);
        break;
    case Scheme::kOma:
        set.private_w = mrt_precoder(estimated_h, power);
        break;
    case Scheme::kRsma:
    {
        set.common_w = rsma_common_precoder(scenario.antenna_count, power, alpha);
        const double private_power = std::pow(power, alpha);
        set.private_w = mmse_precoder(estimated_h, noise, private_power);
        break;
    }
    }
    return set;
}

double total_power(const PrecoderSet &precoders)
{
    double p = frobenius_norm_squared(precoders.private_w);
    for (const Complex &x : precoders.common_w)
        p += std::norm(x);
    return p;
}

} // namespace leosim
