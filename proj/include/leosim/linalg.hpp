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

#include <complex>
#include <cstddef>
#include <vector>

namespace leosim
{

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

// Dense complex matrix, row-major storage. All problem sizes here are tiny
// (antenna and user counts below ten), so the implementation favors clarity
// over blocking or vectorization.
class CMatrix
{
  public:
    CMatrix() = default;

    // Zero-initialized rows x cols matrix.
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex> &data() const { return data_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

// C = A * B. Throws std::invalid_argument on inner-dimension mismatch.
CMatrix matmul(const CMatrix &a, const CMatrix &b);

// Conjugate transpose A^H.
CMatrix hermitian_transpose(const CMatrix &a);

// Solves (G + shift*I) X = B for X, where G is Hermitian positive
// semidefinite and shift > 0, via a Cholesky factorization of the shifted
// matrix. Throws std::invalid_argument if G is not square, if B has a
// mismatched row count, or if shift <= 0; throws std::runtime_error if the
// factorization encounters a non-positive pivot (G not positive
// semidefinite to working precision).
CMatrix solve_regularized(const CMatrix &gram, double shift, const CMatrix &rhs);

// Euclidean norm sqrt(sum |v_i|^2).
double vector_norm(const CVector &v);

// Frobenius norm squared: sum of |a_ij|^2. Equals tr(A^H A).
double frobenius_norm_squared(const CMatrix &a);

// Inner product sum_i conj(a_i) * b_i. Throws on length mismatch.
Complex inner_product(const CVector &a, const CVector &b);

} // namespace leosim
