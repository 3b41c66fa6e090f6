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

#include "cswap/circuit.hpp"
#include "cswap/estimate.hpp"
#include "cswap/oracles.hpp"
#include "cswap/states.hpp"

using namespace cswap;

namespace {

ControlDistribution bell_distribution() {
    return run_entanglement_test(build_bell(BellVariant::PsiPlus),
                                 build_bell(BellVariant::PsiPlus))
        .control_dist;
}

} // namespace

TEST_CASE("sampling is reproducible byte for byte") {
    const auto dist = bell_distribution();
    const ShotCounts a = sample(dist, 10000, {42, 7});
    const ShotCounts b = sample(dist, 10000, {42, 7});
    CHECK(a.counts == b.counts);

    const ShotCounts c = sample(dist, 10000, {42, 8});
    CHECK(a.counts != c.counts); // different stream, different draws
}

TEST_CASE("point-mass distributions sample to a single outcome") {
    const auto dist = ControlDistribution::from_probabilities(2, {1.0, 0.0, 0.0, 0.0});
    const ShotCounts counts = sample(dist, 500, {1, 0});
    CHECK(counts.count(0) == 500);
    CHECK(counts.total_shots == 500);
}

TEST_CASE("bell sampling lands inside the binomial envelope") {
    const auto dist = bell_distribution();
    const ShotCounts counts = sample(dist, 1000000, {1, 0});
    const double p11 = static_cast<double>(counts.count(3)) / 1e6;
    CHECK(std::abs(p11 - 0.25) < 0.0013); // 3 sigma
}

TEST_CASE("signature-probability estimator") {
    ShotCounts zeros;
    zeros.n = 2;
    zeros.counts = {100, 0, 0, 0};
    zeros.total_shots = 100;
    const Estimate none = estimate_signature_probability(zeros, SignatureClass::EvenOnes);
    CHECK(none.value == 0.0);
    CHECK(none.std_error == 0.0);

    const auto ghz4 =
        run_entanglement_test(build_ghz(4), build_ghz(4)).control_dist;
    const ShotCounts counts = sample(ghz4, 1000000, {2, 0});
    const Estimate even = estimate_signature_probability(counts, SignatureClass::EvenOnes);
    CHECK(std::abs(even.value - 0.4375) < 4.0 * even.std_error);
    CHECK(even.std_error == doctest::Approx(std::sqrt(0.4375 * 0.5625 / 1e6)).epsilon(0.05));
}

TEST_CASE("degree estimator tracks the analytic value") {
    const ShotCounts bell = sample(bell_distribution(), 1000000, {3, 0});
    const Estimate cn = estimate_cn(bell);
    CHECK(std::abs(cn.value - 1.0) < 3.0 * cn.std_error);

    const auto w3 = run_entanglement_test(build_w(3), build_w(3)).control_dist;
    const Estimate w_cn = estimate_cn(sample(w3, 1000000, {4, 0}));
    CHECK(std::abs(w_cn.value - 2.0 * std::sqrt(1.0 / 3.0)) < 3.0 * w_cn.std_error);

    ShotCounts flat;
    flat.n = 2;
    flat.counts = {400, 0, 0, 0};
    flat.total_shots = 400;
    const Estimate silent = estimate_cn(flat);
    CHECK(silent.value == 0.0);
    CHECK(silent.std_error == doctest::Approx(0.1)); // 2 / sqrt(400)
}

TEST_CASE("trials to first signature behave geometrically") {
    const Estimate bell = trials_to_first_signature(bell_distribution(), {5, 0}, 20000);
    CHECK(std::abs(bell.value - 4.0) < 4.0 * bell.std_error);

    const auto half = ControlDistribution::from_probabilities(2, {0.5, 0.0, 0.0, 0.5});
    const Estimate two = trials_to_first_signature(half, {6, 0}, 20000);
    CHECK(std::abs(two.value - 2.0) < 4.0 * two.std_error);

    const auto sure = ControlDistribution::from_probabilities(2, {0.0, 0.0, 0.0, 1.0});
    const Estimate ones = trials_to_first_signature(sure, {7, 0}, 100);
    CHECK(ones.value == doctest::Approx(1.0));
    CHECK(ones.std_error == doctest::Approx(0.0));

    const auto never = ControlDistribution::from_probabilities(2, {1.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_AS(trials_to_first_signature(never, {8, 0}, 10), UndetectableError);
}

TEST_CASE("classification verdicts") {
    // GHZ_4 exposes a popcount-4 signature.
    const auto ghz4 = run_entanglement_test(build_ghz(4), build_ghz(4)).control_dist;
    const auto ghz_report = classify(sample(ghz4, 20000, {9, 0}));
    CHECK(ghz_report.entangled == Verdict::Detected);
    CHECK(ghz_report.class_hint == ClassHint::GhzLike);
    CHECK(!ghz_report.unequal_copies_flag);
    CHECK(ghz_report.signatures_seen.count("1111") == 1);

    // W_5 only ever shows two-ones signatures.
    const auto w5 = run_entanglement_test(build_w(5), build_w(5)).control_dist;
    const auto w_report = classify(sample(w5, 20000, {10, 0}));
    CHECK(w_report.entangled == Verdict::Detected);
    CHECK(w_report.class_hint == ClassHint::WLike);

    ShotCounts silent;
    silent.n = 3;
    silent.counts.assign(8, 0);
    silent.counts[0] = 50;
    silent.total_shots = 50;
    const auto none = classify(silent);
    CHECK(none.entangled == Verdict::NotDetectedInBudget);
    CHECK(none.class_hint == ClassHint::Indeterminate);

    // A single signature observation detects but does not class-hint W.
    ShotCounts one_hit;
    one_hit.n = 2;
    one_hit.counts = {99, 0, 0, 1};
    one_hit.total_shots = 100;
    const auto hinted = classify(one_hit);
    CHECK(hinted.entangled == Verdict::Detected);
    CHECK(hinted.class_hint == ClassHint::Indeterminate);

    // Odd outcomes raise the unequal-copies flag.
    const auto unequal =
        run_entanglement_test(build_ghz(3), build_unbalanced_ghz(3, 0.5)).control_dist;
    const auto flagged = classify(sample(unequal, 20000, {11, 0}));
    CHECK(flagged.unequal_copies_flag);
}

TEST_CASE("product states never classify as detected") {
    const auto product =
        run_entanglement_test(StateVector::basis_state(3, 5), StateVector::basis_state(3, 5))
            .control_dist;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto report = classify(sample(product, 5000, {seed, 0}));
        CHECK(report.entangled == Verdict::NotDetectedInBudget);
    }
}

TEST_CASE("mimic resolution distinguishes the unbalanced GHZ3 from W3") {
    const StateVector mimic = build_unbalanced_ghz(3, ghz3_w3_mimic_delta());
    const auto ghz_result = resolve_ghz3_w3_mimic(mimic, 10000, {12, 0});
    CHECK(ghz_result.detections == 0);
    CHECK(ghz_result.verdict == MimicVerdict::UnbalancedGhz3);
    CHECK(ghz_result.confidence == doctest::Approx(0.0));

    const auto w_result = resolve_ghz3_w3_mimic(build_w(3), 10000, {13, 0});
    CHECK(w_result.verdict == MimicVerdict::W3Like);
    const double sigma = std::sqrt((1.0 / 6.0) * (5.0 / 6.0) / 10000.0);
    CHECK(std::abs(w_result.detection_rate - 1.0 / 6.0) < 4.0 * sigma);
    CHECK(w_result.confidence ==
          doctest::Approx(1.0 - std::pow(1.0 - w_result.detection_rate, 10000.0)));

    const auto product_result = resolve_ghz3_w3_mimic(StateVector(3), 200, {14, 0});
    CHECK(product_result.detections == 0);
    CHECK(product_result.verdict == MimicVerdict::UnbalancedGhz3);
}

TEST_CASE("independent collapse loses the mimic discrimination guarantee") {
    // W3 under independent collapse: only the (Bell, Bell) branch pair hits
    // |11>, at (2/3)^2 * 1/4 = 1/9 per round.
    const auto w_result =
        resolve_ghz3_w3_mimic(build_w(3), 20000, {15, 0}, /*identical_collapse=*/false);
    CHECK(w_result.verdict == MimicVerdict::W3Like);
    const double sigma_w = std::sqrt((1.0 / 9.0) * (8.0 / 9.0) / 20000.0);
    CHECK(std::abs(w_result.detection_rate - 1.0 / 9.0) < 4.0 * sigma_w);

    // The GHZ3 mimic also fires under independent collapse: the mismatched
    // branch pair (|00>, |11>) is an unequal pair with P(|11>_C) = 1/4, so
    // the rate is 2 a0^2 a1^2 / 4 = 1/9 as well. Only identical collapse
    // keeps the always-zero property that resolves the mimic.
    const StateVector mimic = build_unbalanced_ghz(3, ghz3_w3_mimic_delta());
    const auto ghz_result =
        resolve_ghz3_w3_mimic(mimic, 20000, {16, 0}, /*identical_collapse=*/false);
    const double sigma_g = std::sqrt((1.0 / 9.0) * (8.0 / 9.0) / 20000.0);
    CHECK(std::abs(ghz_result.detection_rate - 1.0 / 9.0) < 4.0 * sigma_g);

    // Under the default identical collapse the same state never fires; see
    // the mimic test above.
}

TEST_CASE("class-total estimates stay inside four standard errors across seeds") {
    // 20-seed battery over every state family at n <= 6; at least 95% of the
    // (family, seed) cells must put each class total within 4 binomial
    // standard errors of the oracle value.
    std::vector<ControlDistribution> dists;
    for (std::uint32_t n : {2u, 4u, 6u}) {
        EntanglementTester tester(n);
        dists.push_back(tester.run(build_ghz(n), build_ghz(n)).control_dist);
        dists.push_back(tester.run(build_w(n), build_w(n)).control_dist);
        const StateVector ug = build_unbalanced_ghz(n, 0.3);
        dists.push_back(tester.run(ug, ug).control_dist);
        const StateVector uw = build_unbalanced_w(n, 0.3);
        dists.push_back(tester.run(uw, uw).control_dist);
        const StateVector cg = build_corrupted_ghz(n, 0.4);
        dists.push_back(tester.run(cg, cg).control_dist);
        const StateVector cw = build_corrupted_w(n, 0.4);
        dists.push_back(tester.run(cw, cw).control_dist);
        dists.push_back(
            tester.run(build_ghz(n), build_unbalanced_ghz(n, 0.3)).control_dist);
        dists.push_back(tester.run(build_w(n), build_unbalanced_w(n, 0.3)).control_dist);
    }
    const std::uint64_t shots = 1000000;
    std::uint64_t cells = 0;
    std::uint64_t cells_ok = 0;
    for (std::size_t d = 0; d < dists.size(); ++d) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const ShotCounts counts = sample(dists[d], shots, {seed, d});
            bool ok = true;
            for (SignatureClass cls : {SignatureClass::AllZero, SignatureClass::EvenOnes,
                                       SignatureClass::OddOnes}) {
                const double p = dists[d].class_total(cls);
                const Estimate est = estimate_signature_probability(counts, cls);
                const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
                ok = ok && std::abs(est.value - p) <= 4.0 * std::max(sigma, 1e-9);
            }
            ++cells;
            cells_ok += ok;
        }
    }
    CHECK(static_cast<double>(cells_ok) >= 0.95 * static_cast<double>(cells));
}

TEST_CASE("geometric consistency of trials to first signature") {
    for (const double p : {0.25, 3.0 / 8.0, 1.0 / 3.0, 0.5 - 1.0 / 256.0}) {
        // Signature mass on |11>, remainder on |00>.
        const auto dist = ControlDistribution::from_probabilities(2, {1.0 - p, 0.0, 0.0, p});
        const std::uint64_t reps = 20000;
        const Estimate est =
            trials_to_first_signature(dist, {static_cast<std::uint64_t>(1e9 * p), 1}, reps);
        CHECK(std::abs(est.value - 1.0 / p) <= 3.0 * est.std_error);
    }
}

TEST_CASE("shot counts round-trip through JSON") {
    const ShotCounts counts = sample(bell_distribution(), 5000, {17, 3});
    const ShotCounts back = ShotCounts::from_json_text(counts.to_json_text());
    CHECK(back.n == counts.n);
    CHECK(back.total_shots == counts.total_shots);
    CHECK(back.counts == counts.counts);
    CHECK(back.rng.seed == 17);
    CHECK(back.rng.stream == 3);
    CHECK(counts.to_json_text().find(kRngAlgorithm) != std::string::npos);
}
