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
// Seeded Haar-like random states for verification batteries and tests.
// Not part of the public simulation API.

#pragma once

#include <cmath>

#include "cswap/engine.hpp"
#include "cswap/estimate.hpp"

namespace cswap::detail {

// Standard normal via Box-Muller on the Rng's fixed 53-bit uniforms, so the
// sequence is reproducible everywhere.
inline double gaussian(Rng &rng) {
    const double u1 = 1.0 - rng.uniform01(); // (0, 1]
    const double u2 = rng.uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
}

inline StateVector random_state(std::uint32_t n, Rng &rng, bool complex_amps = true) {
    std::vector<Complex> amps(1ULL << n);
    for (Complex &a : amps) {
        const double re = gaussian(rng);
        const double im = complex_amps ? gaussian(rng) : 0.0;
        a = Complex{re, im};
    }
    StateVector state = StateVector::from_amplitudes(n, std::move(amps));
    state.normalize();
    return state;
}

// Single-excitation random state: amplitudes on |0...1_q...0> only.
inline StateVector random_w_like_state(std::uint32_t n, Rng &rng, bool complex_amps = true) {
    std::vector<Complex> amps(1ULL << n, Complex{0.0, 0.0});
    for (std::uint32_t q = 0; q < n; ++q) {
        const double re = gaussian(rng);
        const double im = complex_amps ? gaussian(rng) : 0.0;
        amps[1ULL << q] = Complex{re, im};
    }
    StateVector state = StateVector::from_amplitudes(n, std::move(amps));
    state.normalize();
    return state;
}

} // namespace cswap::detail
