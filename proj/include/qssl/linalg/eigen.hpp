// Copyright 2026 The qssl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "qssl/linalg/matrix.hpp"

namespace qssl::linalg {

/// Eigenvalues in ascending order; column k of `vectors` pairs with
/// `values[k]`.
template <typename T> struct EigenDecomposition {
    std::vector<double> values;
    Matrix<T> vectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian (or real symmetric) matrix.
///
/// Each rotation first removes the phase of the pivot element, then applies
/// the classical real rotation, so the same code serves both scalar types.
/// Throws ValidationError if `m` deviates from its adjoint by more than
/// `hermitian_tol`.
template <typename T>
EigenDecomposition<T> jacobi_eigen(const Matrix<T> &m, double hermitian_tol = 1e-12);

/// Eigenvalues only, ascending. Skips the eigenvector accumulation.
template <typename T>
std::vector<double> eigvals_hermitian(const Matrix<T> &m, double hermitian_tol = 1e-12);

extern template EigenDecomposition<double> jacobi_eigen(const Matrix<double> &, double);
extern template EigenDecomposition<cplx> jacobi_eigen(const Matrix<cplx> &, double);
extern template std::vector<double> eigvals_hermitian(const Matrix<double> &, double);
extern template std::vector<double> eigvals_hermitian(const Matrix<cplx> &, double);

} // namespace qssl::linalg
