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
#include <stdexcept>

#include "leosim/linalg.hpp"
#include "leosim/rng.hpp"

using namespace leosim;

namespace
{

CMatrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64 &rng)
{
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Complex(rng.next_symmetric(1.0), rng.next_symmetric(1.0));
    return m;
}

// Independent product in a different accumulation order than the library.
CMatrix reference_product(const CMatrix &a, const CMatrix &b)
{
    CMatrix c(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
        {
            Complex s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b)
{
    REQUIRE(a.rows() == b.rows());
    REQUIRE(a.cols() == b.cols());
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

} // namespace

TEST_CASE("matmul matches an independent triple loop on random matrices")
{
    SplitMix64 rng(42);
    for (int trial = 0; trial < 20; ++trial)
    {
        const std::size_t m = 1 + rng.next() % 7;
        const std::size_t k = 1 + rng.next() % 7;
        const std::size_t n = 1 + rng.next() % 7;
        const CMatrix a = random_matrix(m, k, rng);
        const CMatrix b = random_matrix(k, n, rng);
        CHECK(max_abs_diff(matmul(a, b), reference_product(a, b)) < 1e-13);
    }
}

TEST_CASE("matmul with the identity is a no-op")
{
    SplitMix64 rng(7);
    const CMatrix a = random_matrix(5, 3, rng);
    CHECK(max_abs_diff(matmul(CMatrix::identity(5), a), a) == 0.0);
    CHECK(max_abs_diff(matmul(a, CMatrix::identity(3)), a) == 0.0);
}

TEST_CASE("matmul rejects mismatched inner dimensions")
{
    CHECK_THROWS_AS(matmul(CMatrix(2, 3), CMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("hermitian transpose conjugates and swaps indices")
{
    SplitMix64 rng(11);
    const CMatrix a = random_matrix(4, 6, rng);
    const CMatrix t = hermitian_transpose(a);
    REQUIRE(t.rows() == 6);
    REQUIRE(t.cols() == 4);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            CHECK(t(j, i) == std::conj(a(i, j)));

    SUBCASE("applying it twice returns the original")
    {
        CHECK(max_abs_diff(hermitian_transpose(t), a) == 0.0);
    }
}

TEST_CASE("(AB)^H equals B^H A^H")
{
    SplitMix64 rng(13);
    const CMatrix a = random_matrix(4, 5, rng);
    const CMatrix b = random_matrix(5, 3, rng);
    const CMatrix lhs = hermitian_transpose(matmul(a, b));
    const CMatrix rhs = matmul(hermitian_transpose(b), hermitian_transpose(a));
    CHECK(max_abs_diff(lhs, rhs) < 1e-13);
}

TEST_CASE("solve_regularized solves the shifted system to tight residual")
{
    SplitMix64 rng(99);
    for (int trial = 0; trial < 20; ++trial)
    {
        const std::size_t n = 2 + rng.next() % 6;
        const std::size_t k = 1 + rng.next() % 4;

        // Hermitian PSD Gram matrix from a random factor.
        const CMatrix factor = random_matrix(n + 1, n, rng);
        const CMatrix gram = matmul(hermitian_transpose(factor), factor);
        const CMatrix rhs = random_matrix(n, k, rng);
        const double shift = 1e-6 + rng.next_unit();

        const CMatrix x = solve_regularized(gram, shift, rhs);

        // Residual of (G + shift I) X - B, relative to |B|.
        CMatrix shifted = gram;
        for (std::size_t i = 0; i < n; ++i)
            shifted(i, i) += shift;
        const CMatrix reconstructed = matmul(shifted, x);

        double residual_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j)
                residual_sq += std::norm(reconstructed(i, j) - rhs(i, j));
        const double rel = std::sqrt(residual_sq / frobenius_norm_squared(rhs));
        CHECK(rel <= 1e-9);
    }
}

TEST_CASE("solve_regularized with a zero matrix is a pure scale")
{
    // (0 + c I)^{-1} B = B / c.
    SplitMix64 rng(3);
    const CMatrix rhs = random_matrix(4, 2, rng);
    const double shift = 0.25;
    const CMatrix x = solve_regularized(CMatrix(4, 4), shift, rhs);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(std::abs(x(i, j) - rhs(i, j) / shift) < 1e-15);
}

TEST_CASE("solve_regularized rejects bad inputs")
{
    CHECK_THROWS_AS(solve_regularized(CMatrix(3, 2), 1.0, CMatrix(3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(solve_regularized(CMatrix(3, 3), 1.0, CMatrix(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(solve_regularized(CMatrix(3, 3), 0.0, CMatrix(3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(solve_regularized(CMatrix(3, 3), -1.0, CMatrix(3, 1)), std::invalid_argument);
}

TEST_CASE("solve_regularized rejects an indefinite matrix")
{
    CMatrix g(2, 2);
    g(0, 0) = -5.0;
    g(1, 1) = -5.0;
    CHECK_THROWS_AS(solve_regularized(g, 1.0, CMatrix(2, 1)), std::runtime_error);
}

TEST_CASE("vector_norm matches hand values")
{
    CHECK(vector_norm({}) == 0.0);
    CHECK(vector_norm({Complex(3.0, 4.0)}) == doctest::Approx(5.0).epsilon(1e-15));
    // Unit-magnitude entries: norm is sqrt of the length.
    const CVector v(9, std::polar(1.0, 0.7));
    CHECK(vector_norm(v) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("inner_product conjugates the first argument")
{
    const CVector a = {Complex(1.0, 2.0), Complex(0.0, -1.0)};
    const CVector b = {Complex(3.0, -4.0), Complex(2.0, 2.0)};
    // conj(a) . b = (1-2i)(3-4i) + (0+1i)(2+2i) = (3-8) + i(-6-4) + (-2+2i)
    const Complex expected = Complex(-5.0, -10.0) + Complex(-2.0, 2.0);
    CHECK(inner_product(a, b) == expected);
    CHECK_THROWS_AS(inner_product(a, CVector(3)), std::invalid_argument);
}

TEST_CASE("frobenius_norm_squared equals tr(A^H A)")
{
    SplitMix64 rng(21);
    const CMatrix a = random_matrix(4, 3, rng);
    const CMatrix gram = matmul(hermitian_transpose(a), a);
    double trace = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        trace += gram(i, i).real();
    CHECK(frobenius_norm_squared(a) == doctest::Approx(trace).epsilon(1e-13));
}
