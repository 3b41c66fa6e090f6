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
#include <optional>
#include <span>
#include <vector>

#include "cswap/common.hpp"

namespace cswap {

// Qubit i is bit i of the basis-state integer label, bit 0 least significant.
// This convention is fixed repo-wide.
using QubitIndex = std::uint32_t;

struct GateOp {
    enum class Kind { H, Cnot, Toffoli, Fredkin };

    Kind kind;
    std::vector<QubitIndex> controls;
    std::vector<QubitIndex> targets;

    static GateOp hadamard(QubitIndex target);
    static GateOp cnot(QubitIndex control, QubitIndex target);
    static GateOp toffoli(QubitIndex c0, QubitIndex c1, QubitIndex target);
    static GateOp fredkin(QubitIndex control, QubitIndex t0, QubitIndex t1);
};

// Dense statevector over m qubits: 2^m complex amplitudes, 16 bytes each.
// Gate kernels run in place with bitmask traversal; no gate matrices are
// ever materialized.
class StateVector {
  public:
    // |0...0>
    explicit StateVector(std::uint32_t num_qubits);

    // Amplitude 1 at `label`, 0 elsewhere.
    static StateVector basis_state(std::uint32_t num_qubits, std::uint64_t label);

    // Takes ownership of `amps` (size must be 2^num_qubits). Does not
    // normalize; callers that accept unnormalized input normalize explicitly.
    static StateVector from_amplitudes(std::uint32_t num_qubits, std::vector<Complex> amps);

    std::uint32_t num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }
    const Complex &operator[](std::uint64_t i) const { return amps_[i]; }
    Complex &operator[](std::uint64_t i) { return amps_[i]; }
    const std::vector<Complex> &amplitudes() const { return amps_; }

    double norm_squared() const;
    double norm() const;
    void normalize(); // throws std::invalid_argument on (near-)zero norm

    void apply(const GateOp &gate);
    void apply_h(QubitIndex q);
    void apply_cnot(QubitIndex control, QubitIndex target);
    void apply_toffoli(QubitIndex c0, QubitIndex c1, QubitIndex target);
    void apply_fredkin(QubitIndex control, QubitIndex t0, QubitIndex t1);

    // Applies H to each listed qubit in order. Equivalent to (and bitwise
    // identical with) sequential apply_h calls; when the qubits form the top
    // block of the register the traversal is fused into a single pass.
    void apply_h_layer(std::span<const QubitIndex> qubits);

    void fill_zero();

  private:
    std::uint32_t num_qubits_ = 0;
    std::vector<Complex> amps_;

    void check_qubit(QubitIndex q) const;
};

// Kronecker product; qubits of `a` occupy the low bit positions:
// result[ (j << a.num_qubits()) | i ] = a[i] * b[j].
StateVector tensor(const StateVector &a, const StateVector &b);

// <a|b> with conjugation on a.
Complex inner_product(const StateVector &a, const StateVector &b);

// Probabilities over the selected qubits: entry k sums |amplitude|^2 over all
// basis states whose selected bits match k (bit j of k = qubits[j]).
std::vector<double> marginal_distribution(const StateVector &state,
                                          std::span<const QubitIndex> qubits);

// Computational-basis measurement of one qubit. `state` holds the
// renormalized post-measurement state with the measured qubit removed
// (remaining qubits keep their relative order); absent when the outcome has
// (near-)zero probability.
struct MeasurementOutcome {
    double probability = 0.0;
    std::optional<StateVector> state;
};
MeasurementOutcome project_qubit(const StateVector &state, QubitIndex q, int outcome);

} // namespace cswap
