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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cswap {

using Complex = std::complex<double>;

// Tolerances used across the library. Each gate application may drift the
// norm by at most kPerGateTolerance; aggregate quantities (distributions,
// norms after full circuits) are held to kAggregateTolerance.
inline constexpr double kPerGateTolerance = 1e-12;
inline constexpr double kAggregateTolerance = 1e-10;

// Probabilities below this value are clamped to exactly 0 in reported
// distributions, so that analytically-zero outcomes print as zero.
inline constexpr double kProbabilityClamp = 1e-12;

// Requested state size exceeds the configured dense-capacity cap.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Dense-capacity cap in qubits. Defaults to 24 (a full 8-qubit CSWAP test);
// the CSWAP_MAX_QUBITS environment variable overrides it.
std::uint32_t max_total_qubits();

// Worker count used by the engine's internal index-space partitioning.
// Results are bitwise independent of this value. Defaults to the smaller of
// the hardware concurrency and 4; CSWAP_THREADS overrides.
unsigned parallel_workers();
void set_parallel_workers(unsigned workers);

} // namespace cswap
