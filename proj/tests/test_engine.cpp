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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "test_util.hpp"

using namespace cswap;
using detail::random_state;
using testutil::max_amp_diff;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("basis states place the single amplitude by label, bit 0 LSB") {
    const StateVector zero = StateVector::basis_state(1, 0);
    CHECK(zero[0] == Complex{1.0, 0.0});
    CHECK(zero[1] == Complex{0.0, 0.0});

    const StateVector three = StateVector::basis_state(2, 3);
    CHECK(three[3] == Complex{1.0, 0.0});
    CHECK(three.norm() == doctest::Approx(1.0));

    const StateVector five = StateVector::basis_state(3, 5);
    CHECK(five[5] == Complex{1.0, 0.0}); // qubits 0 and 2 set

    CHECK_THROWS_AS(StateVector::basis_state(2, 4), std::invalid_argument);
}

TEST_CASE("hadamard on |0> gives the equal superposition") {
    StateVector s(1);
    s.apply_h(0);
    CHECK(std::abs(s[0] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(s[1] - kInvSqrt2) < 1e-15);
    s.apply_h(0); // H^2 = 1
    CHECK(std::abs(s[0] - 1.0) < 1e-15);
}

TEST_CASE("cnot flips the target only when the control is set") {
    StateVector s = StateVector::basis_state(2, 1); // qubit0 = 1
    s.apply_cnot(0, 1);
    CHECK(s[3] == Complex{1.0, 0.0}); // |11>

    StateVector t = StateVector::basis_state(2, 2); // control clear
    t.apply_cnot(0, 1);
    CHECK(t[2] == Complex{1.0, 0.0});
}

TEST_CASE("toffoli needs both controls") {
    StateVector s = StateVector::basis_state(3, 3); // qubits 0,1 set
    s.apply_toffoli(0, 1, 2);
    CHECK(s[7] == Complex{1.0, 0.0});
    s.apply_toffoli(0, 2, 1); // controls 0 and 2 set now -> flips qubit 1
    CHECK(s[5] == Complex{1.0, 0.0});
}

TEST_CASE("fredkin swaps targets only under an active control") {
    // control = qubit 2, targets 0 and 1; state |1>_c |10> has qubit 1 set.
    StateVector s = StateVector::basis_state(3, 0b110);
    s.apply_fredkin(2, 0, 1);
    CHECK(s[0b101] == Complex{1.0, 0.0}); // targets exchanged

    Rng rng({11, 0});
    const StateVector arbitrary = random_state(3, rng);
    StateVector off = arbitrary;
    // Control qubit in |0>: identity. Project out the control-set half first.
    StateVector control_clear(3);
    for (std::uint64_t i = 0; i < 4; ++i) {
        control_clear[i] = arbitrary[i];
    }
    control_clear.normalize();
    StateVector touched = control_clear;
    touched.apply_fredkin(2, 0, 1);
    CHECK(max_amp_diff(touched, control_clear) == 0.0);
}

TEST_CASE("fredkin equals the CNOT/Toffoli decomposition on random states") {
    // Fredkin(c; a, b) = CNOT(b->a) Toffoli(c, a -> b) CNOT(b->a), checked
    // against explicit 8x8 matrices multiplied the slow way.
    const auto cnot_ba = testutil::cnot_matrix(3, 1, 0);
    const auto toffoli_cab = testutil::toffoli_matrix(3, 2, 0, 1);
    const auto composed =
        testutil::multiply(cnot_ba, testutil::multiply(toffoli_cab, cnot_ba));

    Rng rng({12, 0});
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const StateVector in = random_state(3, rng);
        StateVector kernel = in;
        kernel.apply_fredkin(2, 0, 1);
        const auto expected = testutil::apply_matrix(composed, in.amplitudes());
        worst = std::max(worst, max_amp_diff(kernel, expected));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("every gate kind is an involution on random states") {
    Rng rng({13, 0});
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const StateVector in = random_state(4, rng);
        StateVector s = in;
        s.apply_h(1);
        s.apply_h(1);
        worst = std::max(worst, max_amp_diff(s, in));
        s = in;
        s.apply_cnot(3, 0);
        s.apply_cnot(3, 0);
        worst = std::max(worst, max_amp_diff(s, in));
        s = in;
        s.apply_toffoli(0, 2, 3);
        s.apply_toffoli(0, 2, 3);
        worst = std::max(worst, max_amp_diff(s, in));
        s = in;
        s.apply_fredkin(1, 0, 3);
        s.apply_fredkin(1, 0, 3);
        worst = std::max(worst, max_amp_diff(s, in));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("norm drifts less than 1e-10 per gate over long sequences") {
    Rng rng({14, 0});
    StateVector s = random_state(5, rng);
    const int gates = 500;
    for (int g = 0; g < gates; ++g) {
        switch (g % 3) {
        case 0:
            s.apply_h(g % 5);
            break;
        case 1:
            s.apply_cnot(g % 5, (g + 1) % 5);
            break;
        default:
            s.apply_fredkin(g % 5, (g + 1) % 5, (g + 2) % 5);
            break;
        }
    }
    CHECK(std::abs(s.norm() - 1.0) < 1e-10 * gates);
}

TEST_CASE("gate application rejects bad indices") {
    StateVector s(3);
    CHECK_THROWS_AS(s.apply_h(3), std::invalid_argument);
    CHECK_THROWS_AS(s.apply_cnot(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(s.apply_toffoli(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(s.apply_fredkin(0, 1, 3), std::invalid_argument);
}

TEST_CASE("tensor places the second factor on the high bits") {
    const StateVector a = StateVector::basis_state(1, 0);
    const StateVector b = StateVector::basis_state(1, 0);
    const StateVector ab = tensor(a, b);
    CHECK(ab[0] == Complex{1.0, 0.0});

    // Bell (low 2 qubits) with |0> appended: weight on labels 0 and 3.
    StateVector bell(2);
    bell[0] = kInvSqrt2;
    bell[3] = kInvSqrt2;
    const StateVector extended = tensor(bell, StateVector(1));
    CHECK(std::abs(extended[0] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(extended[3] - kInvSqrt2) < 1e-15);
    CHECK(extended.norm() == doctest::Approx(1.0));

    // |1> appended instead: amplitudes move up by 4.
    const StateVector shifted = tensor(bell, StateVector::basis_state(1, 1));
    CHECK(std::abs(shifted[4] - kInvSqrt2) < 1e-15);
    CHECK(std::abs(shifted[7] - kInvSqrt2) < 1e-15);
}

TEST_CASE("tensor norm is multiplicative on random unnormalized inputs") {
    Rng rng({15, 0});
    for (int t = 0; t < 20; ++t) {
        StateVector a = random_state(2, rng);
        StateVector b = random_state(3, rng);
        const double scale_a = 0.5 + rng.uniform01();
        const double scale_b = 0.5 + rng.uniform01();
        std::vector<Complex> aa(a.amplitudes());
        std::vector<Complex> bb(b.amplitudes());
        for (auto &x : aa) {
            x *= scale_a;
        }
        for (auto &x : bb) {
            x *= scale_b;
        }
        const StateVector sa = StateVector::from_amplitudes(2, std::move(aa));
        const StateVector sb = StateVector::from_amplitudes(3, std::move(bb));
        CHECK(tensor(sa, sb).norm() == doctest::Approx(sa.norm() * sb.norm()));
    }
}

TEST_CASE("marginals sum matching basis weights") {
    const StateVector s = StateVector::basis_state(2, 3);
    const std::array<QubitIndex, 2> both{0, 1};
    const auto full = marginal_distribution(s, both);
    CHECK(full[3] == doctest::Approx(1.0));
    CHECK(full[0] + full[1] + full[2] == doctest::Approx(0.0));

    StateVector bell(2);
    bell[0] = kInvSqrt2;
    bell[3] = kInvSqrt2;
    const std::array<QubitIndex, 1> q0{0};
    const auto half = marginal_distribution(bell, q0);
    CHECK(half[0] == doctest::Approx(0.5));
    CHECK(half[1] == doctest::Approx(0.5));

    // Selecting every qubit reproduces the full probability vector.
    Rng rng({16, 0});
    const StateVector r = random_state(3, rng);
    const std::array<QubitIndex, 3> all{0, 1, 2};
    const auto dist = marginal_distribution(r, all);
    for (std::uint64_t i = 0; i < r.dim(); ++i) {
        CHECK(dist[i] == doctest::Approx(std::norm(r[i])));
    }

    const std::array<QubitIndex, 2> dup{1, 1};
    CHECK_THROWS_AS(marginal_distribution(r, dup), std::invalid_argument);
}

TEST_CASE("marginal over non-contiguous qubits packs bits by list position") {
    // |101>: qubit0 = 1, qubit2 = 1. Selecting {2, 0} gives key bit0 = qubit2.
    const StateVector s = StateVector::basis_state(3, 5);
    const std::array<QubitIndex, 2> sel{2, 0};
    const auto dist = marginal_distribution(s, sel);
    CHECK(dist[3] == doctest::Approx(1.0));
}

TEST_CASE("inner product conjugates the left argument") {
    Rng rng({17, 0});
    const StateVector psi = random_state(3, rng);
    CHECK(std::abs(inner_product(psi, psi) - Complex{1.0, 0.0}) < 1e-12);

    const StateVector e0 = StateVector::basis_state(2, 0);
    const StateVector e3 = StateVector::basis_state(2, 3);
    CHECK(std::abs(inner_product(e0, e3)) == 0.0);

    // <phi+|psi+> = 0.
    StateVector phip(2), psip(2);
    phip[0] = kInvSqrt2;
    phip[3] = kInvSqrt2;
    psip[0] = 0.0;
    psip[1] = kInvSqrt2;
    psip[2] = kInvSqrt2;
    CHECK(std::abs(inner_product(phip, psip)) == 0.0);

    StateVector i_state(1);
    i_state[0] = Complex{0.0, 1.0};
    const StateVector one = StateVector::basis_state(1, 0);
    CHECK(inner_product(i_state, one).imag() == doctest::Approx(-1.0));
}

TEST_CASE("h layer fusion is bitwise identical to sequential gates") {
    // 21 qubits with the layer on the top 5: large enough to take the fused
    // path.
    const std::uint32_t m = 21;
    Rng rng({18, 0});
    std::vector<Complex> amps(1ULL << m);
    for (auto &a : amps) {
        a = Complex{detail::gaussian(rng), detail::gaussian(rng)};
    }
    StateVector fused = StateVector::from_amplitudes(m, amps);
    fused.normalize();
    StateVector plain = fused;

    std::vector<QubitIndex> layer;
    for (QubitIndex q = m - 5; q < m; ++q) {
        layer.push_back(q);
    }
    fused.apply_h_layer(layer);
    for (QubitIndex q : layer) {
        plain.apply_h(q);
    }
    for (std::uint64_t i = 0; i < fused.dim(); ++i) {
        REQUIRE(fused[i] == plain[i]);
    }
}

TEST_CASE("results are bitwise independent of the worker count") {
    const unsigned saved = parallel_workers();
    Rng rng({19, 0});
    std::vector<Complex> amps(1ULL << 20);
    for (auto &a : amps) {
        a = Complex{detail::gaussian(rng), 0.0};
    }
    StateVector one_worker = StateVector::from_amplitudes(20, amps);
    one_worker.normalize();
    StateVector four_workers = one_worker;

    set_parallel_workers(1);
    one_worker.apply_h(19);
    one_worker.apply_fredkin(2, 11, 19);
    set_parallel_workers(4);
    four_workers.apply_h(19);
    four_workers.apply_fredkin(2, 11, 19);
    set_parallel_workers(saved);

    for (std::uint64_t i = 0; i < one_worker.dim(); ++i) {
        REQUIRE(one_worker[i] == four_workers[i]);
    }
}

TEST_CASE("capacity cap and amplitude footprint") {
    CHECK(sizeof(Complex) == 16);
    if (max_total_qubits() == 24) {
        CHECK_THROWS_AS(StateVector(25), CapacityError);
        CHECK_THROWS_AS(tensor(StateVector(20), StateVector(5)), CapacityError);
    }
}

TEST_CASE("project_qubit renormalizes and drops the measured qubit") {
    // (|00> + |11>)/sqrt2, measure qubit 0.
    StateVector bell(2);
    bell[0] = kInvSqrt2;
    bell[3] = kInvSqrt2;
    const auto out0 = project_qubit(bell, 0, 0);
    CHECK(out0.probability == doctest::Approx(0.5));
    REQUIRE(out0.state.has_value());
    CHECK(std::abs((*out0.state)[0] - 1.0) < 1e-12);

    const auto out1 = project_qubit(bell, 0, 1);
    CHECK(out1.probability == doctest::Approx(0.5));
    CHECK(std::abs((*out1.state)[1] - 1.0) < 1e-12);

    // Impossible branch: |00>, outcome 1.
    const auto none = project_qubit(StateVector(2), 1, 1);
    CHECK(none.probability == doctest::Approx(0.0));
    CHECK(!none.state.has_value());
}
