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
#include <vector>

#include "cswap/control_distribution.hpp"
#include "cswap/engine.hpp"

namespace cswap {

// Register placement for the n-qubit entanglement test: a_qubits[i],
// b_qubits[i] and c_qubits[i] are the i-th test, copy and control qubits.
struct RegisterLayout {
    std::uint32_t n = 0;
    std::vector<QubitIndex> a_qubits;
    std::vector<QubitIndex> b_qubits;
    std::vector<QubitIndex> c_qubits;

    // Default packing: a = [0, n), b = [n, 2n), c = [2n, 3n).
    static RegisterLayout packed(std::uint32_t n);
    std::uint32_t total_qubits() const { return 3 * n; }
};

struct CswapTestResult {
    ControlDistribution control_dist;
    std::optional<StateVector> final_state; // 3n qubits, present when requested
};

// Gate sequence of the entanglement test under the default packing:
// H on each control, Fredkin(c_i, a_i, b_i) for each pair, H on each control.
// The restoring CNOT(a_i -> b_i) pairs only rewrite the test/copy registers
// and leave the control marginal unchanged; they are off by default.
std::vector<GateOp> build_entanglement_test(std::uint32_t n, bool with_restoring_cnots = false);

// Runs the n-qubit entanglement test repeatedly while reusing one 3n-qubit
// work buffer. Execution applies the control Hadamards as fused layers,
// which is bitwise identical to applying the gate list one gate at a time.
class EntanglementTester {
  public:
    explicit EntanglementTester(std::uint32_t n, bool with_restoring_cnots = false);

    const RegisterLayout &layout() const { return layout_; }
    const std::vector<GateOp> &gates() const { return gates_; }

    CswapTestResult run(const StateVector &a, const StateVector &b, bool keep_final = false);

  private:
    RegisterLayout layout_;
    std::vector<GateOp> gates_;
    bool with_restoring_cnots_;
    StateVector work_;

    void load_initial(const StateVector &a, const StateVector &b);
};

// One-shot convenience wrapper around EntanglementTester.
CswapTestResult run_entanglement_test(const StateVector &a, const StateVector &b,
                                      bool keep_final = false);

// Equivalence SWAP test: single control qubit, H — controlled swap of all
// qubit pairs — H. Returns the probability of measuring the control in |1>,
// which is (1 - |<psi|phi>|^2) / 2.
double run_equivalence_test(const StateVector &psi, const StateVector &phi);

// Runs the entanglement test with b = a and returns the fidelity
// |<initial|final>|^2 of the final composite state against the initial one.
// Equals 1 exactly when `a` is a product state.
double check_nondestructive(const StateVector &a);

} // namespace cswap
