// Copyright 2026 The cswap-sim Authors.
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
//
// Brute-force oracles for the engine tests: explicit dense gate matrices
// built from truth tables and 2x2 blocks, multiplied the slow way. Nothing
// here shares code with the bitmask kernels it checks.

#pragma once

#include <cmath>
#include <vector>

#include "cswap/detail/random_states.hpp"
#include "cswap/engine.hpp"

namespace testutil {

using cswap::Complex;
using cswap::StateVector;

using Matrix = std::vector<std::vector<Complex>>; // dense 2^m x 2^m

inline Matrix identity(std::size_t dim) {
    Matrix m(dim, std::vector<Complex>(dim, Complex{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

// H on one qubit of an m-qubit register, entry by entry.
inline Matrix h_matrix(std::uint32_t m, std::uint32_t q) {
    const std::size_t dim = 1ULL << m;
    const double r = 1.0 / std::sqrt(2.0);
    const double h[2][2] = {{r, r}, {r, -r}};
    Matrix mat(dim, std::vector<Complex>(dim, Complex{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if ((i & ~(1ULL << q)) == (j & ~(1ULL << q))) {
                mat[i][j] = h[(i >> q) & 1][(j >> q) & 1];
            }
        }
    }
    return mat;
}

// Permutation matrix from a classical bit transform.
template <typename F> Matrix permutation_matrix(std::uint32_t m, F &&transform) {
    const std::size_t dim = 1ULL << m;
    Matrix mat(dim, std::vector<Complex>(dim, Complex{0.0, 0.0}));
    for (std::size_t j = 0; j < dim; ++j) {
        mat[transform(j)][j] = 1.0;
    }
    return mat;
}

inline Matrix cnot_matrix(std::uint32_t m, std::uint32_t control, std::uint32_t target) {
    return permutation_matrix(m, [=](std::uint64_t j) {
        return (j >> control) & 1 ? j ^ (std::uint64_t{1} << target) : j;
    });
}

inline Matrix toffoli_matrix(std::uint32_t m, std::uint32_t c0, std::uint32_t c1,
                             std::uint32_t target) {
    return permutation_matrix(m, [=](std::uint64_t j) {
        return ((j >> c0) & 1) && ((j >> c1) & 1) ? j ^ (std::uint64_t{1} << target) : j;
    });
}

inline Matrix fredkin_matrix(std::uint32_t m, std::uint32_t control, std::uint32_t t0,
                             std::uint32_t t1) {
    return permutation_matrix(m, [=](std::uint64_t j) -> std::uint64_t {
        if (((j >> control) & 1) == 0) {
            return j;
        }
        const std::uint64_t b0 = (j >> t0) & 1;
        const std::uint64_t b1 = (j >> t1) & 1;
        if (b0 == b1) {
            return j;
        }
        return j ^ (std::uint64_t{1} << t0) ^ (std::uint64_t{1} << t1);
    });
}

inline Matrix multiply(const Matrix &a, const Matrix &b) {
    const std::size_t dim = a.size();
    Matrix out(dim, std::vector<Complex>(dim, Complex{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            if (a[i][k] == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

inline std::vector<Complex> apply_matrix(const Matrix &m, const std::vector<Complex> &v) {
    std::vector<Complex> out(v.size(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

inline double max_amp_diff(const StateVector &a, const std::vector<Complex> &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

inline double max_amp_diff(const StateVector &a, const StateVector &b) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

// Final composite state of the two-qubit entanglement test with equal
// inputs, assembled directly from the derived closed form: with
// D = A00 A11 - A01 A10,
//   |psi_f> = [|A>|A> - (D/2) X] |00>_C + (D/2) X |11>_C,
//   X = |00,11> - |01,10> - |10,01> + |11,00>.
// The sign structure of the |00>_C bracket follows from the circuit algebra;
// the printed form with four plus signs is not normalized.
inline StateVector analytic_final_state_2q(const StateVector &a) {
    const Complex d = a[0] * a[3] - a[1] * a[2];
    std::vector<Complex> amps(1ULL << 6, Complex{0.0, 0.0});
    auto at = [&](std::uint64_t u, std::uint64_t w, std::uint64_t c) -> Complex & {
        return amps[u | (w << 2) | (c << 4)];
    };
    for (std::uint64_t u = 0; u < 4; ++u) {
        for (std::uint64_t w = 0; w < 4; ++w) {
            at(u, w, 0) = a[u] * a[w];
        }
    }
    const Complex half_d = d * 0.5;
    const std::uint64_t cross_u[4] = {0, 1, 2, 3};
    const std::uint64_t cross_w[4] = {3, 2, 1, 0};
    const double sign[4] = {1.0, -1.0, -1.0, 1.0};
    for (int k = 0; k < 4; ++k) {
        at(cross_u[k], cross_w[k], 0) -= half_d * sign[k];
        at(cross_u[k], cross_w[k], 3) += half_d * sign[k];
    }
    return StateVector::from_amplitudes(6, std::move(amps));
}

} // namespace testutil
