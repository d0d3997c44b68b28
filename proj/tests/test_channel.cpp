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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "leosim/channel.hpp"

using namespace leosim;

namespace
{

// Closed-form correlation of two steering vectors separated by d_eta: a
// normalized Dirichlet kernel in the spacing-scaled angle difference. Serves
// as an independent oracle for the numeric correlation.
double dirichlet_correlation(const Scenario &s, double d_eta)
{
    const double ratio = s.antenna_spacing_m / s.wavelength_m();
    const double x = std::numbers::pi * ratio * d_eta;
    const double denom = s.antenna_count * std::sin(x);
    if (std::abs(denom) < 1e-300)
        return 1.0;
    return std::abs(std::sin(s.antenna_count * x) / denom);
}

} // namespace

TEST_CASE("steering vector entries are unit magnitude with symmetric phases")
{
    const Scenario s = default_scenario();
    const double eta = 0.23;
    const CVector a = steering_vector(s, eta);
    REQUIRE(a.size() == 6);

    const double ratio = s.antenna_spacing_m / s.wavelength_m();
    for (std::size_t n = 0; n < a.size(); ++n)
    {
        CHECK(std::abs(a[n]) == doctest::Approx(1.0).epsilon(1e-15));
        // Element n (0-based) carries phase -pi * ratio * (N - 1 - 2n) * eta.
        const double expected = -std::numbers::pi * ratio * (6.0 - 1.0 - 2.0 * n) * eta;
        CHECK(std::arg(a[n]) ==
              doctest::Approx(std::remainder(expected, 2.0 * std::numbers::pi)).epsilon(1e-12));
    }

    SUBCASE("phases are antisymmetric about the array center")
    {
        for (std::size_t n = 0; n < a.size(); ++n)
            CHECK(a[n] == std::conj(a[a.size() - 1 - n]));
    }

    SUBCASE("eta = 0 gives the all-ones vector")
    {
        for (const Complex &x : steering_vector(s, 0.0))
            CHECK(x == Complex(1.0, 0.0));
    }

    SUBCASE("norm is sqrt(N) for any angle")
    {
        CHECK(vector_norm(a) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
    }
}

TEST_CASE("steering vectors compose: a(x) . a(y) = a(x + y) elementwise")
{
    const Scenario s = default_scenario();
    const CVector ax = steering_vector(s, 0.11);
    const CVector ay = steering_vector(s, -0.07);
    const CVector axy = steering_vector(s, 0.04);
    for (std::size_t n = 0; n < ax.size(); ++n)
        CHECK(std::abs(ax[n] * ay[n] - axy[n]) < 1e-14);
}

TEST_CASE("channel vector has the free-space magnitude on every element")
{
    const Scenario s = default_scenario();
    const UserGeometry g = user_geometry(s, 0);
    const CVector h = channel_vector(s, g);
    REQUIRE(h.size() == 6);

    // Amplitude sqrt(G_user G_sat) lambda / (4 pi d) with G_sat = 16 dBi,
    // G_user = 0 dBi, d = 600 km.
    const double expected_amp = std::sqrt(1.0 * 39.810717055349734) * 0.149896229 /
                                (4.0 * std::numbers::pi * 600e3);
    for (const Complex &x : h)
        CHECK(std::abs(x) == doctest::Approx(expected_amp).epsilon(1e-12));

    // Pinned regression value for the nadir channel energy.
    CHECK(vector_norm(h) * vector_norm(h) ==
          doctest::Approx(9.44083562349301e-14).epsilon(1e-12));
}

TEST_CASE("channel magnitude scales as 1/d")
{
    Scenario s = default_scenario();
    s.user_ground_offsets_m = {0.0, 0.0};
    const double n0 = vector_norm(channel_vector(s, user_geometry(s, 0)));

    Scenario far = s;
    far.altitude_m = 1200e3;
    const double n1 = vector_norm(channel_vector(far, user_geometry(far, 0)));
    CHECK(n0 / n1 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("apply_aod_error preserves magnitudes and is exact at zero")
{
    const Scenario s = default_scenario();
    Scenario sc = s;
    sc.user_ground_offsets_m = {0.0, 80e3};
    const CVector h = channel_vector(sc, user_geometry(sc, 1));

    SUBCASE("zero error returns the input unchanged")
    {
        const CVector same = apply_aod_error(sc, h, 0.0);
        for (std::size_t n = 0; n < h.size(); ++n)
            CHECK(same[n] == h[n]);
    }

    SUBCASE("nonzero error keeps per-element magnitude")
    {
        const CVector shifted = apply_aod_error(sc, h, 0.17);
        for (std::size_t n = 0; n < h.size(); ++n)
            CHECK(std::abs(shifted[n]) == doctest::Approx(std::abs(h[n])).epsilon(1e-14));
        CHECK(vector_norm(shifted) == doctest::Approx(vector_norm(h)).epsilon(1e-14));
    }

    SUBCASE("error composes like an angle shift of the steering part")
    {
        // h(eta) with error e has the same correlation to h(eta) as two
        // steering vectors separated by e.
        const CVector shifted = apply_aod_error(sc, h, 0.12);
        CHECK(correlation(h, shifted) ==
              doctest::Approx(dirichlet_correlation(sc, 0.12)).epsilon(1e-12));
    }

    SUBCASE("length mismatch is rejected")
    {
        CHECK_THROWS_AS(apply_aod_error(sc, CVector(4), 0.1), std::invalid_argument);
    }
}

TEST_CASE("draw_epsilons is bounded, seeded, and independent per user")
{
    SplitMix64 rng(123);
    const ErrorModel model{0.2};

    std::vector<double> all;
    for (int rep = 0; rep < 200; ++rep)
    {
        const std::vector<double> eps = draw_epsilons(model, 2, rng);
        REQUIRE(eps.size() == 2);
        for (double e : eps)
        {
            CHECK(e >= -0.2);
            CHECK(e <= 0.2);
            all.push_back(e);
        }
    }

    // Same seed reproduces the same sequence.
    SplitMix64 rng_a(77);
    SplitMix64 rng_b(77);
    CHECK(draw_epsilons(model, 4, rng_a) == draw_epsilons(model, 4, rng_b));

    // Crude uniformity check: mean near 0, both halves populated.
    double mean = 0.0;
    int negatives = 0;
    for (double e : all)
    {
        mean += e;
        negatives += e < 0.0 ? 1 : 0;
    }
    mean /= static_cast<double>(all.size());
    CHECK(std::abs(mean) < 0.02);
    CHECK(negatives > 120);
    CHECK(negatives < 280);

    SUBCASE("zero width draws exact zeros")
    {
        SplitMix64 r(9);
        for (double e : draw_epsilons(ErrorModel{0.0}, 5, r))
            CHECK(e == 0.0);
    }

    SUBCASE("bad arguments are rejected")
    {
        SplitMix64 r(9);
        CHECK_THROWS_AS(draw_epsilons(ErrorModel{-0.1}, 2, r), std::invalid_argument);
        CHECK_THROWS_AS(draw_epsilons(model, 0, r), std::invalid_argument);
    }
}

TEST_CASE("correlation matches the closed-form kernel across separations")
{
    const Scenario s = default_scenario();
    for (double offset : {0.5e3, 5e3, 20e3, 50e3, 100e3, 150e3, 200e3})
    {
        Scenario sc = s;
        sc.user_ground_offsets_m = {0.0, offset};
        const CVector h0 = channel_vector(sc, user_geometry(sc, 0));
        const CVector h1 = channel_vector(sc, user_geometry(sc, 1));
        const double d_eta = user_geometry(sc, 1).aod_cosine - user_geometry(sc, 0).aod_cosine;
        CHECK(correlation(h0, h1) ==
              doctest::Approx(dirichlet_correlation(sc, d_eta)).epsilon(1e-10));
    }
}

TEST_CASE("correlation is symmetric, normalized, and scale invariant")
{
    Scenario s = default_scenario();
    s.user_ground_offsets_m = {0.0, 60e3};
    const CVector h0 = channel_vector(s, user_geometry(s, 0));
    const CVector h1 = channel_vector(s, user_geometry(s, 1));

    const double rho = correlation(h0, h1);
    CHECK(rho > 0.0);
    CHECK(rho < 1.0);
    CHECK(correlation(h1, h0) == rho);
    CHECK(correlation(h0, h0) == doctest::Approx(1.0).epsilon(1e-14));

    CVector scaled = h1;
    for (Complex &x : scaled)
        x *= Complex(0.0, 3.0); // phase and magnitude change together
    CHECK(correlation(h0, scaled) == doctest::Approx(rho).epsilon(1e-14));

    CHECK_THROWS_AS(correlation(h0, CVector(3)), std::invalid_argument);
    CHECK_THROWS_AS(correlation(h0, CVector(6)), std::invalid_argument);
}

TEST_CASE("build_channels assembles true and estimated matrices consistently")
{
    Scenario s = default_scenario();
    s.user_ground_offsets_m = {0.0, 120e3};
    const std::vector<double> eps = {0.05, -0.13};
    const ChannelSet set = build_channels(s, eps);

    REQUIRE(set.true_h.rows() == 2);
    REQUIRE(set.true_h.cols() == 6);
    REQUIRE(set.estimated_h.rows() == 2);
    CHECK(set.epsilons == eps);

    for (int k = 0; k < 2; ++k)
    {
        const CVector h = channel_vector(s, user_geometry(s, k));
        const CVector h_est = apply_aod_error(s, h, eps[static_cast<std::size_t>(k)]);
        for (std::size_t n = 0; n < 6; ++n)
        {
            CHECK(set.true_h(static_cast<std::size_t>(k), n) == h[n]);
            CHECK(set.estimated_h(static_cast<std::size_t>(k), n) == h_est[n]);
        }
    }

    CHECK_THROWS_AS(build_channels(s, std::vector<double>{0.1}), std::invalid_argument);
}
