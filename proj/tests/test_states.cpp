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

#include <cmath>

#include "cswap/states.hpp"
#include "test_util.hpp"

using namespace cswap;

TEST_CASE("ghz and w constructors") {
    const StateVector ghz2 = build_ghz(2);
    CHECK(std::abs(ghz2[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(ghz2[3] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(ghz2[1] == Complex{0.0, 0.0});

    const StateVector w3 = build_w(3);
    for (std::uint64_t label : {1ULL, 2ULL, 4ULL}) {
        CHECK(std::abs(w3[label] - 1.0 / std::sqrt(3.0)) < 1e-15);
    }
    CHECK(w3[0] == Complex{0.0, 0.0});
    CHECK(w3.norm() == doctest::Approx(1.0));

    CHECK_THROWS_AS(build_ghz(1), std::invalid_argument);
}

TEST_CASE("bell variants are orthonormal") {
    const BellVariant variants[] = {BellVariant::PhiPlus, BellVariant::PhiMinus,
                                    BellVariant::PsiPlus, BellVariant::PsiMinus};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const Complex ip = inner_product(build_bell(variants[i]), build_bell(variants[j]));
            if (i == j) {
                CHECK(std::abs(ip - Complex{1.0, 0.0}) < 1e-12);
            } else {
                CHECK(std::abs(ip) < 1e-12);
            }
        }
    }
}

TEST_CASE("unbalanced ghz covers the balanced and product limits") {
    const StateVector balanced = build_unbalanced_ghz(4, 0.0);
    const StateVector ghz = build_ghz(4);
    for (std::uint64_t i = 0; i < ghz.dim(); ++i) {
        REQUIRE(balanced[i] == ghz[i]); // bit-exact at delta = 0
    }

    const StateVector product = build_unbalanced_ghz(3, 3.14159265358979323846 / 4.0);
    CHECK(std::abs(product[0] - 1.0) < 1e-15);
    CHECK(std::abs(product[7]) < 1e-15);

    // The W3 mimic: sqrt(2/3)|000> + sqrt(1/3)|111>.
    const StateVector mimic = build_unbalanced_ghz(3, ghz3_w3_mimic_delta());
    CHECK(std::abs(mimic[0] - std::sqrt(2.0 / 3.0)) < 1e-14);
    CHECK(std::abs(mimic[7] - std::sqrt(1.0 / 3.0)) < 1e-14);
    CHECK(ghz3_w3_mimic_delta() == doctest::Approx(0.17).epsilon(0.01));
}

TEST_CASE("unbalanced w limits and normalization") {
    const StateVector balanced = build_unbalanced_w(5, 0.0);
    const StateVector w = build_w(5);
    for (std::uint64_t i = 0; i < w.dim(); ++i) {
        REQUIRE(balanced[i] == w[i]);
    }

    const StateVector tipped = build_unbalanced_w(4, 3.14159265358979323846 / 2.0);
    CHECK(std::abs(tipped[1]) < 1e-15); // first amplitude vanishes
    for (std::uint64_t label : {2ULL, 4ULL, 8ULL}) {
        CHECK(std::abs(tipped[label] - 1.0 / std::sqrt(3.0)) < 1e-14);
    }

    CHECK(std::abs(build_unbalanced_w(3, 0.3).norm() - 1.0) < 1e-12);
}

TEST_CASE("corrupted families add an orthogonal amplitude") {
    const StateVector base = build_corrupted_ghz(4, 0.0);
    const StateVector ghz = build_ghz(4);
    for (std::uint64_t i = 0; i < ghz.dim(); ++i) {
        REQUIRE(base[i] == ghz[i]);
    }

    const StateVector fully = build_corrupted_ghz(3, 3.14159265358979323846 / 2.0);
    CHECK(std::abs(fully[1] - 1.0) < 1e-15); // |0...01>: qubit 0 set
    CHECK(std::abs(fully[0]) < 1e-15);
    CHECK(std::abs(fully[7]) < 1e-15);

    const StateVector alt = build_corrupted_ghz(3, 0.4, /*extra_qubit=*/2);
    CHECK(std::abs(alt[4] - std::sin(0.4)) < 1e-15);

    const StateVector cw = build_corrupted_w(3, 0.2);
    for (std::uint64_t label : {1ULL, 2ULL, 4ULL}) {
        CHECK(std::abs(cw[label] - std::cos(0.2) / std::sqrt(3.0)) < 1e-15);
    }
    CHECK(std::abs(cw[0] - std::sin(0.2)) < 1e-15);
    CHECK(std::abs(cw.norm() - 1.0) < 1e-12);

    const StateVector w_base = build_corrupted_w(4, 0.0);
    const StateVector w = build_w(4);
    for (std::uint64_t i = 0; i < w.dim(); ++i) {
        REQUIRE(w_base[i] == w[i]);
    }
}

TEST_CASE("every constructor is normalized across parameter grids") {
    for (std::uint32_t n = 2; n <= 6; ++n) {
        for (double p = -1.5; p <= 1.5; p += 0.25) {
            CHECK(std::abs(build_unbalanced_ghz(n, p).norm() - 1.0) < 1e-12);
            CHECK(std::abs(build_unbalanced_w(n, p).norm() - 1.0) < 1e-12);
            CHECK(std::abs(build_corrupted_ghz(n, p).norm() - 1.0) < 1e-12);
            CHECK(std::abs(build_corrupted_w(n, p).norm() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("general states normalize and reject zero input") {
    const StateVector s = build_general({1.0, 0.0, 0.0, 0.0});
    CHECK(s[0] == Complex{1.0, 0.0});
    CHECK(s.num_qubits() == 2);

    const StateVector scaled = build_general({2.0, 0.0});
    CHECK(std::abs(scaled[0] - 1.0) < 1e-15);

    CHECK_THROWS_AS(build_general({0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(build_general({1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("compact spec grammar") {
    CHECK(build(StateSpec::parse("ghz:3")).num_qubits() == 3);
    CHECK(build(StateSpec::parse("bell:psi+"))[1].real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(build(StateSpec::parse("basis:2:3"))[3] == Complex{1.0, 0.0});
    CHECK(build(StateSpec::parse("w:4")).num_qubits() == 4);

    const StateSpec unb = StateSpec::parse("unbalanced_ghz:3:0.17");
    CHECK(unb.family == StateFamily::UnbalancedGhz);
    CHECK(unb.n == 3);
    CHECK(unb.delta == doctest::Approx(0.17));

    const StateSpec mimic = StateSpec::parse("mimic_ghz3");
    CHECK(mimic.delta == doctest::Approx(ghz3_w3_mimic_delta()));

    const StateVector g = build(StateSpec::parse("general:[0.5+0.5i,0,0,0.5-0.5i]"));
    CHECK(g[0] == Complex{0.5, 0.5});
    CHECK(g[3] == Complex{0.5, -0.5});

    const StateVector imag = build(StateSpec::parse("general:[1,1i]"));
    CHECK(imag[1].imag() == doctest::Approx(1 / std::sqrt(2.0)));

    CHECK_THROWS_AS(StateSpec::parse("dicke:3"), std::invalid_argument);
    CHECK_THROWS_AS(StateSpec::parse("bell:theta+"), std::invalid_argument);
    CHECK_THROWS_AS(StateSpec::parse("ghz:3:7"), std::invalid_argument);
    CHECK_THROWS_AS(StateSpec::parse("basis:2:4"), std::invalid_argument);
}

TEST_CASE("state specs round-trip through JSON") {
    for (const char *text :
         {"ghz:5", "w:2", "bell:phi-", "basis:3:5", "unbalanced_ghz:4:-0.31",
          "unbalanced_w:3:0.5", "corrupted_ghz:4:0.25", "corrupted_ghz:4:0.25:2",
          "corrupted_w:6:1.1", "general:[0.6,0,0,0.8i]"}) {
        const StateSpec spec = StateSpec::parse(text);
        const StateSpec back = StateSpec::from_json_text(spec.to_json_text());
        const StateVector a = build(spec);
        const StateVector b = build(back);
        REQUIRE(a.num_qubits() == b.num_qubits());
        CHECK(testutil::max_amp_diff(a, b) == 0.0);
    }
}

TEST_CASE("describe gives a readable summary") {
    CHECK(StateSpec::parse("unbalanced_w:3:0.5").describe() == "unbalanced_w:3:0.5");
    CHECK(StateSpec::parse("bell:psi-").describe() == "bell:psi-");
}
