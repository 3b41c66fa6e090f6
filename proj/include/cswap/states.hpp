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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cswap/engine.hpp"

namespace cswap {

enum class StateFamily {
    ProductBasis,
    Bell,
    Ghz,
    W,
    UnbalancedGhz,
    UnbalancedW,
    CorruptedGhz,
    CorruptedW,
    General,
};

enum class BellVariant { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

// Declarative description of a state family; `build` turns it into a
// normalized StateVector. Angles are radians throughout.
struct StateSpec {
    StateFamily family = StateFamily::Ghz;
    std::uint32_t n = 0;                // qubit count (families other than Bell/General)
    std::uint64_t label = 0;            // ProductBasis
    BellVariant variant = BellVariant::PhiPlus;
    double delta = 0.0;                 // Unbalanced families
    double phi = 0.0;                   // Corrupted families
    std::uint32_t extra_qubit = 0;      // CorruptedGhz added basis state: |1> on this qubit
    std::vector<Complex> amplitudes;    // General

    std::uint32_t num_qubits() const;

    // Compact command-line form, e.g. "ghz:3", "bell:psi+",
    // "unbalanced_ghz:3:0.17", "basis:2:3", "general:[1,0,0,1i]".
    static StateSpec parse(const std::string &text);

    // Canonical JSON form with only the fields relevant to the family.
    static StateSpec from_json_text(const std::string &json_text);
    std::string to_json_text() const;
    std::string describe() const; // compact round-trippable description
};

StateVector build(const StateSpec &spec);

StateVector build_bell(BellVariant variant);
StateVector build_ghz(std::uint32_t n);
StateVector build_w(std::uint32_t n);

// sin(pi/4 + delta)|0...0> + cos(pi/4 + delta)|1...1>
StateVector build_unbalanced_ghz(std::uint32_t n, double delta);

// sqrt(1/n) cos(delta) |0...01>
//   + sqrt(1/(n-1) - cos^2(delta)/(n(n-1))) * sum_{j>=1} |0...1_j...0>
StateVector build_unbalanced_w(std::uint32_t n, double delta);

// cos(phi) GHZ_n + sin(phi) |extra>, where |extra> has a single 1 on
// `extra_qubit` (default qubit 0, the paper's last written position).
StateVector build_corrupted_ghz(std::uint32_t n, double phi, std::uint32_t extra_qubit = 0);

// cos(phi) W_n + sin(phi) |0...0>
StateVector build_corrupted_w(std::uint32_t n, double phi);

// Normalizes and wraps raw amplitudes; warns on stderr when the input norm
// deviates from 1 by 1e-6 or more, and rejects the all-zero vector.
StateVector build_general(std::vector<Complex> amplitudes);

// The delta at which the unbalanced GHZ_3 state replicates the W_3 control
// distribution: asin(sqrt(2/3)) - pi/4.
double ghz3_w3_mimic_delta();

const char *to_string(StateFamily family);
const char *to_string(BellVariant variant);

} // namespace cswap
