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

#include "cswap/circuit.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cswap {

namespace {

void require(bool cond, const char *msg) {
    if (!cond) {
        throw std::invalid_argument(msg);
    }
}

void require_normalized(const StateVector &s, const char *which) {
    if (std::abs(s.norm_squared() - 1.0) > 1e-6) {
        throw std::invalid_argument(std::string(which) + " state is not normalized");
    }
}

} // namespace

const char *to_string(SignatureClass c) {
    switch (c) {
    case SignatureClass::AllZero:
        return "all_zero";
    case SignatureClass::EvenOnes:
        return "even_ones";
    case SignatureClass::ExactlyOneOne:
        return "exactly_one_one";
    case SignatureClass::ExactlyTwoOnes:
        return "exactly_two_ones";
    case SignatureClass::OddOnes:
        return "odd_ones";
    }
    return "?";
}

ControlDistribution ControlDistribution::from_probabilities(std::uint32_t n,
                                                            std::vector<double> probs) {
    require(probs.size() == (1ULL << n), "control distribution needs 2^n entries");
    double total = 0.0;
    for (double p : probs) {
        total += p;
    }
    if (std::abs(total - 1.0) > kAggregateTolerance) {
        throw std::invalid_argument("control distribution does not sum to 1");
    }
    for (double &p : probs) {
        if (p < kProbabilityClamp) {
            p = 0.0;
        }
    }
    return {n, std::move(probs)};
}

double ControlDistribution::sum() const {
    return std::accumulate(probs.begin(), probs.end(), 0.0);
}

double ControlDistribution::class_total(SignatureClass c) const {
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < probs.size(); ++mask) {
        if (in_class(c, mask)) {
            total += probs[mask];
        }
    }
    return total;
}

std::string ControlDistribution::outcome_string(std::uint64_t mask) const {
    std::string s(n, '0');
    for (std::uint32_t i = 0; i < n; ++i) {
        if (mask & (1ULL << i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::map<std::string, double> ControlDistribution::as_map(bool include_zeros) const {
    std::map<std::string, double> out;
    for (std::uint64_t mask = 0; mask < probs.size(); ++mask) {
        if (include_zeros || probs[mask] != 0.0) {
            out[outcome_string(mask)] = probs[mask];
        }
    }
    return out;
}

RegisterLayout RegisterLayout::packed(std::uint32_t n) {
    RegisterLayout layout;
    layout.n = n;
    layout.a_qubits.resize(n);
    layout.b_qubits.resize(n);
    layout.c_qubits.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        layout.a_qubits[i] = i;
        layout.b_qubits[i] = n + i;
        layout.c_qubits[i] = 2 * n + i;
    }
    return layout;
}

std::vector<GateOp> build_entanglement_test(std::uint32_t n, bool with_restoring_cnots) {
    require(n >= 1, "entanglement test needs n >= 1");
    if (3ULL * n > max_total_qubits()) {
        throw CapacityError("entanglement test on " + std::to_string(n) + " qubits needs " +
                            std::to_string(3 * n) + " total qubits, above the capacity of " +
                            std::to_string(max_total_qubits()));
    }
    const RegisterLayout layout = RegisterLayout::packed(n);
    std::vector<GateOp> gates;
    gates.reserve(3 * n + (with_restoring_cnots ? n : 0));
    for (std::uint32_t i = 0; i < n; ++i) {
        gates.push_back(GateOp::hadamard(layout.c_qubits[i]));
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        gates.push_back(GateOp::fredkin(layout.c_qubits[i], layout.a_qubits[i], layout.b_qubits[i]));
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        gates.push_back(GateOp::hadamard(layout.c_qubits[i]));
    }
    if (with_restoring_cnots) {
        for (std::uint32_t i = 0; i < n; ++i) {
            gates.push_back(GateOp::cnot(layout.a_qubits[i], layout.b_qubits[i]));
        }
    }
    return gates;
}

EntanglementTester::EntanglementTester(std::uint32_t n, bool with_restoring_cnots)
    : layout_(RegisterLayout::packed(n)),
      gates_(build_entanglement_test(n, with_restoring_cnots)),
      with_restoring_cnots_(with_restoring_cnots),
      work_(3 * n) {}

void EntanglementTester::load_initial(const StateVector &a, const StateVector &b) {
    const std::uint32_t n = layout_.n;
    require(a.num_qubits() == n && b.num_qubits() == n,
            "test and copy states must both have the configured qubit count");
    require_normalized(a, "test");
    require_normalized(b, "copy");
    work_.fill_zero();
    for (std::uint64_t j = 0; j < b.dim(); ++j) {
        const Complex bj = b[j];
        if (bj == Complex{0.0, 0.0}) {
            continue;
        }
        const std::uint64_t base = j << n;
        for (std::uint64_t i = 0; i < a.dim(); ++i) {
            work_[base | i] = a[i] * bj;
        }
    }
}

CswapTestResult EntanglementTester::run(const StateVector &a, const StateVector &b,
                                        bool keep_final) {
    const std::uint32_t n = layout_.n;
    load_initial(a, b);
    work_.apply_h_layer(layout_.c_qubits);
    for (std::uint32_t i = 0; i < n; ++i) {
        work_.apply_fredkin(layout_.c_qubits[i], layout_.a_qubits[i], layout_.b_qubits[i]);
    }
    work_.apply_h_layer(layout_.c_qubits);
    if (with_restoring_cnots_) {
        for (std::uint32_t i = 0; i < n; ++i) {
            work_.apply_cnot(layout_.a_qubits[i], layout_.b_qubits[i]);
        }
    }
    CswapTestResult result;
    result.control_dist = ControlDistribution::from_probabilities(
        n, marginal_distribution(work_, layout_.c_qubits));
    if (keep_final) {
        result.final_state = work_;
    }
    return result;
}

CswapTestResult run_entanglement_test(const StateVector &a, const StateVector &b,
                                      bool keep_final) {
    EntanglementTester tester(a.num_qubits());
    return tester.run(a, b, keep_final);
}

double run_equivalence_test(const StateVector &psi, const StateVector &phi) {
    require(psi.num_qubits() == phi.num_qubits(),
            "equivalence test needs equal qubit counts");
    require_normalized(psi, "first");
    require_normalized(phi, "second");
    const std::uint32_t k = psi.num_qubits();
    if (2ULL * k + 1 > max_total_qubits()) {
        throw CapacityError("equivalence test exceeds the dense qubit capacity");
    }
    const QubitIndex control = 2 * k;
    StateVector state = tensor(tensor(psi, phi), StateVector(1));
    state.apply_h(control);
    for (std::uint32_t i = 0; i < k; ++i) {
        state.apply_fredkin(control, i, k + i);
    }
    state.apply_h(control);
    const std::array<QubitIndex, 1> qs{control};
    return marginal_distribution(state, qs)[1];
}

double check_nondestructive(const StateVector &a) {
    require_normalized(a, "test");
    const StateVector initial = tensor(tensor(a, a), StateVector(a.num_qubits()));
    EntanglementTester tester(a.num_qubits());
    const CswapTestResult result = tester.run(a, a, /*keep_final=*/true);
    return std::norm(inner_product(initial, *result.final_state));
}

} // namespace cswap
