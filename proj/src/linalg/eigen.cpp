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

#include "qssl/linalg/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qssl::linalg {
namespace {

inline double conj_of(double x) { return x; }
inline cplx conj_of(cplx x) { return std::conj(x); }
inline double real_of(double x) { return x; }
inline double real_of(cplx x) { return x.real(); }

constexpr int kMaxSweeps = 100;

template <typename T> double off_diagonal_norm(const Matrix<T> &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary J = P R, where P removes the phase of
// a(p,q) and R is the real rotation of the resulting 2x2 real block. Only
// columns p and q are computed; rows p and q follow by Hermitian symmetry.
template <typename T>
void rotate(Matrix<T> &a, Matrix<T> *v, std::size_t p, std::size_t q) {
    const T apq = a(p, q);
    const double mag = std::abs(apq);
    const T phase = apq / mag; // e^{i phi}, or +-1 for real matrices

    const double app = real_of(a(p, p));
    const double aqq = real_of(a(q, q));
    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    // J_pp = c, J_pq = s, J_qp = -s conj(phase), J_qq = c conj(phase)
    const T jqp = -s * conj_of(phase);
    const T jqq = c * conj_of(phase);

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) {
            continue;
        }
        const T akp = a(k, p);
        const T akq = a(k, q);
        const T new_p = akp * c + akq * jqp;
        const T new_q = akp * s + akq * jqq;
        a(k, p) = new_p;
        a(k, q) = new_q;
        a(p, k) = conj_of(new_p);
        a(q, k) = conj_of(new_q);
    }
    a(p, q) = T{};
    a(q, p) = T{};
    a(p, p) = T(app - t * mag);
    a(q, q) = T(aqq + t * mag);

    if (v != nullptr) {
        for (std::size_t k = 0; k < n; ++k) {
            const T vkp = (*v)(k, p);
            const T vkq = (*v)(k, q);
            (*v)(k, p) = vkp * c + vkq * jqp;
            (*v)(k, q) = vkp * s + vkq * jqq;
        }
    }
}

// Cyclic sweeps on `a` in place; rotations accumulate into `v` when given.
template <typename T> void diagonalize(Matrix<T> &a, Matrix<T> *v, double hermitian_tol) {
    if (!a.square()) {
        throw ShapeError("jacobi_eigen: matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
    }
    if (!is_hermitian(a, hermitian_tol)) {
        throw ValidationError("jacobi_eigen: matrix is not Hermitian within " +
                              std::to_string(hermitian_tol));
    }
    const std::size_t n = a.rows();
    // Symmetrize so rounding in the input cannot bias the rotations.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = T(real_of(a(i, i)));
        for (std::size_t j = i + 1; j < n; ++j) {
            const T avg = (a(i, j) + conj_of(a(j, i))) * 0.5;
            a(i, j) = avg;
            a(j, i) = conj_of(avg);
        }
    }
    const double scale = std::max(frobenius_norm(a), 1e-300);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-15 * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= 1e-300) {
                    continue;
                }
                rotate(a, v, p, q);
            }
        }
    }
    if (off_diagonal_norm(a) > 1e-10 * scale) {
        throw NumericalError("jacobi_eigen: no convergence after " +
                             std::to_string(kMaxSweeps) + " sweeps");
    }
}

} // namespace

template <typename T>
EigenDecomposition<T> jacobi_eigen(const Matrix<T> &m, double hermitian_tol) {
    Matrix<T> a = m;
    Matrix<T> v = Matrix<T>::identity(m.rows());
    diagonalize(a, &v, hermitian_tol);
    const std::size_t n = a.rows();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return real_of(a(x, x)) < real_of(a(y, y));
    });

    EigenDecomposition<T> out{std::vector<double>(n), Matrix<T>(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = real_of(a(order[k], order[k]));
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

template <typename T>
std::vector<double> eigvals_hermitian(const Matrix<T> &m, double hermitian_tol) {
    Matrix<T> a = m;
    diagonalize(a, static_cast<Matrix<T> *>(nullptr), hermitian_tol);
    std::vector<double> values(a.rows());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        values[k] = real_of(a(k, k));
    }
    std::sort(values.begin(), values.end());
    return values;
}

template EigenDecomposition<double> jacobi_eigen(const Matrix<double> &, double);
template EigenDecomposition<cplx> jacobi_eigen(const Matrix<cplx> &, double);
template std::vector<double> eigvals_hermitian(const Matrix<double> &, double);
template std::vector<double> eigvals_hermitian(const Matrix<cplx> &, double);

} // namespace qssl::linalg
