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

#include "leosim/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace leosim
{

CMatrix CMatrix::identity(std::size_t n)
{
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

CMatrix matmul(const CMatrix &a, const CMatrix &b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions do not match");

    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

CMatrix hermitian_transpose(const CMatrix &a)
{
    CMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = std::conj(a(i, j));
    return t;
}

CMatrix solve_regularized(const CMatrix &gram, double shift, const CMatrix &rhs)
{
    const std::size_t n = gram.rows();
    if (gram.cols() != n)
        throw std::invalid_argument("solve_regularized: matrix must be square");
    if (rhs.rows() != n)
        throw std::invalid_argument("solve_regularized: right-hand side row count mismatch");
    if (!(shift > 0.0))
        throw std::invalid_argument("solve_regularized: shift must be > 0");

    // Cholesky factorization L L^H of the shifted matrix. The shift makes the
    // matrix positive definite whenever the input is positive semidefinite.
    CMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j)
    {
        double diag = gram(j, j).real() + shift;
        for (std::size_t k = 0; k < j; ++k)
            diag -= std::norm(l(j, k));
        if (!(diag > 0.0))
            throw std::runtime_error("solve_regularized: matrix is not positive semidefinite");
        const double ljj = std::sqrt(diag);
        l(j, j) = ljj;

        for (std::size_t i = j + 1; i < n; ++i)
        {
            Complex sum = gram(i, j);
            for (std::size_t k = 0; k < j; ++k)
                sum -= l(i, k) * std::conj(l(j, k));
            l(i, j) = sum / ljj;
        }
    }

    // Forward and back substitution, one right-hand-side column at a time.
    CMatrix x(n, rhs.cols());
    CVector y(n);
    for (std::size_t c = 0; c < rhs.cols(); ++c)
    {
        for (std::size_t i = 0; i < n; ++i)
        {
            Complex sum = rhs(i, c);
            for (std::size_t k = 0; k < i; ++k)
                sum -= l(i, k) * y[k];
            y[i] = sum / l(i, i);
        }
        for (std::size_t ii = n; ii-- > 0;)
        {
            Complex sum = y[ii];
            for (std::size_t k = ii + 1; k < n; ++k)
                sum -= std::conj(l(k, ii)) * x(k, c);
            x(ii, c) = sum / l(ii, ii);
        }
    }
    return x;
}

double vector_norm(const CVector &v)
{
    double s = 0.0;
    for (const Complex &x : v)
        s += std::norm(x);
    return std::sqrt(s);
}

double frobenius_norm_squared(const CMatrix &a)
{
    double s = 0.0;
    for (const Complex &x : a.data())
        s += std::norm(x);
    return s;
}

Complex inner_product(const CVector &a, const CVector &b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("inner_product: length mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += std::conj(a[i]) * b[i];
    return s;
}

} // namespace leosim
