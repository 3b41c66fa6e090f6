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

#include "cswap/estimate.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <json.hpp>

#include "cswap/circuit.hpp"

namespace cswap {

namespace {

void require(bool cond, const char *msg) {
    if (!cond) {
        throw std::invalid_argument(msg);
    }
}

// Inclusive prefix sums; the final entry is forced to the exact total so a
// uniform draw can never fall past the end.
std::vector<double> cumulative(const std::vector<double> &probs) {
    std::vector<double> cdf(probs.size());
    double run = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        run += probs[i];
        cdf[i] = run;
    }
    return cdf;
}

std::uint64_t draw(const std::vector<double> &cdf, double total, Rng &rng) {
    const double u = rng.uniform01() * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
        it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
}

} // namespace

Rng::Rng(RngSpec spec) : spec_(spec) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(spec.seed & 0xffffffffULL),
        static_cast<std::uint32_t>(spec.seed >> 32),
        static_cast<std::uint32_t>(spec.stream & 0xffffffffULL),
        static_cast<std::uint32_t>(spec.stream >> 32),
    };
    engine_.seed(seq);
}

ShotCounts sample(const ControlDistribution &dist, std::uint64_t shots, RngSpec rng_spec) {
    require(shots >= 1, "sampling needs at least one shot");
    Rng rng(rng_spec);
    const std::vector<double> cdf = cumulative(dist.probs);
    const double total = cdf.back();

    ShotCounts counts;
    counts.n = dist.n;
    counts.rng = rng_spec;
    counts.total_shots = shots;
    counts.counts.assign(dist.probs.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++counts.counts[draw(cdf, total, rng)];
    }
    return counts;
}

Estimate estimate_signature_probability(const ShotCounts &counts, SignatureClass cls) {
    require(counts.total_shots >= 1, "estimate needs at least one shot");
    std::uint64_t hits = 0;
    for (std::uint64_t mask = 0; mask < counts.counts.size(); ++mask) {
        if (in_class(cls, mask)) {
            hits += counts.counts[mask];
        }
    }
    const double shots = static_cast<double>(counts.total_shots);
    const double p = static_cast<double>(hits) / shots;
    return {p, std::sqrt(p * (1.0 - p) / shots)};
}

Estimate estimate_cn(const ShotCounts &counts) {
    const Estimate p = estimate_signature_probability(counts, SignatureClass::EvenOnes);
    if (p.value == 0.0) {
        return {0.0, 2.0 / std::sqrt(static_cast<double>(counts.total_shots))};
    }
    const double root = std::sqrt(p.value);
    return {2.0 * root, p.std_error / root};
}

Estimate trials_to_first_signature(const ControlDistribution &dist, RngSpec rng_spec,
                                   std::uint64_t repetitions) {
    require(repetitions >= 1, "need at least one repetition");
    if (dist.class_total(SignatureClass::EvenOnes) <= 0.0) {
        throw UndetectableError("distribution has no entanglement-signature support");
    }
    Rng rng(rng_spec);
    const std::vector<double> cdf = cumulative(dist.probs);
    const double total = cdf.back();

    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t r = 0; r < repetitions; ++r) {
        std::uint64_t draws = 0;
        for (;;) {
            ++draws;
            if (is_signature(draw(cdf, total, rng))) {
                break;
            }
        }
        const double d = static_cast<double>(draws);
        sum += d;
        sum_sq += d * d;
    }
    const double reps = static_cast<double>(repetitions);
    const double mean = sum / reps;
    const double var = std::max(0.0, sum_sq / reps - mean * mean);
    return {mean, std::sqrt(var / reps)};
}

EntanglementReport classify(const ShotCounts &counts) {
    require(counts.total_shots >= 1, "classification needs at least one shot");
    EntanglementReport report;
    std::uint64_t signature_observations = 0;
    int max_signature_popcount = 0;

    ControlDistribution labels{counts.n, {}}; // for outcome strings only
    for (std::uint64_t mask = 0; mask < counts.counts.size(); ++mask) {
        if (counts.counts[mask] == 0) {
            continue;
        }
        const int pc = std::popcount(mask);
        if (pc % 2 == 1) {
            report.unequal_copies_flag = true;
        }
        if (is_signature(mask)) {
            report.signatures_seen.insert(labels.outcome_string(mask));
            signature_observations += counts.counts[mask];
            max_signature_popcount = std::max(max_signature_popcount, pc);
        }
    }
    report.entangled =
        signature_observations > 0 ? Verdict::Detected : Verdict::NotDetectedInBudget;
    report.c_n_estimate = estimate_cn(counts);
    if (max_signature_popcount >= 4) {
        report.class_hint = ClassHint::GhzLike;
    } else if (max_signature_popcount == 2 && signature_observations >= 4) {
        report.class_hint = ClassHint::WLike;
    } else {
        report.class_hint = ClassHint::Indeterminate;
    }
    return report;
}

MimicResolution resolve_ghz3_w3_mimic(const StateVector &state, std::uint64_t rounds,
                                      RngSpec rng_spec, bool identical_collapse) {
    require(state.num_qubits() == 3, "mimic resolution expects a 3-qubit state");
    require(rounds >= 1, "mimic resolution needs at least one round");

    // The collapse outcomes and the per-branch control distributions are
    // fixed by the state, so they are computed once and sampled per round.
    std::array<MeasurementOutcome, 2> branches{project_qubit(state, 0, 0),
                                               project_qubit(state, 0, 1)};
    EntanglementTester tester(2);

    // pair_p11[i][j]: probability of |11> on the control register when the
    // test copy collapsed to branch i and the copy state to branch j.
    double pair_p11[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (!identical_collapse && i != j) {
                if (branches[i].state && branches[j].state) {
                    pair_p11[i][j] =
                        tester.run(*branches[i].state, *branches[j].state).control_dist.prob(3);
                }
            } else if (i == j && branches[i].state) {
                pair_p11[i][j] =
                    tester.run(*branches[i].state, *branches[i].state).control_dist.prob(3);
            }
        }
    }

    Rng rng(rng_spec);
    const double p1 = branches[1].probability;
    MimicResolution result;
    result.rounds = rounds;
    for (std::uint64_t r = 0; r < rounds; ++r) {
        const int i = rng.uniform01() < p1 ? 1 : 0;
        const int j = identical_collapse ? i : (rng.uniform01() < p1 ? 1 : 0);
        if (rng.uniform01() < pair_p11[i][j]) {
            ++result.detections;
        }
    }
    result.detection_rate = static_cast<double>(result.detections) / static_cast<double>(rounds);
    result.confidence = 1.0 - std::pow(1.0 - result.detection_rate, static_cast<double>(rounds));
    result.verdict = result.detections > 0 ? MimicVerdict::W3Like : MimicVerdict::UnbalancedGhz3;
    return result;
}

std::string ShotCounts::to_json_text() const {
    nlohmann::json j;
    j["n"] = n;
    j["total_shots"] = total_shots;
    nlohmann::json c = nlohmann::json::object();
    ControlDistribution labels{n, {}};
    for (std::uint64_t mask = 0; mask < counts.size(); ++mask) {
        if (counts[mask] != 0) {
            c[labels.outcome_string(mask)] = counts[mask];
        }
    }
    j["counts"] = std::move(c);
    j["rng"] = {{"algorithm", kRngAlgorithm}, {"seed", rng.seed}, {"stream", rng.stream}};
    return j.dump();
}

ShotCounts ShotCounts::from_json_text(const std::string &text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ShotCounts counts;
    counts.n = j.at("n").get<std::uint32_t>();
    counts.total_shots = j.at("total_shots").get<std::uint64_t>();
    counts.counts.assign(1ULL << counts.n, 0);
    for (const auto &[key, value] : j.at("counts").items()) {
        require(key.size() == counts.n, "counts key has the wrong width");
        std::uint64_t mask = 0;
        for (std::uint32_t i = 0; i < counts.n; ++i) {
            if (key[i] == '1') {
                mask |= 1ULL << i;
            } else if (key[i] != '0') {
                throw std::invalid_argument("counts key must be a bitstring");
            }
        }
        counts.counts[mask] = value.get<std::uint64_t>();
    }
    if (j.contains("rng")) {
        counts.rng.seed = j["rng"].value("seed", 0ULL);
        counts.rng.stream = j["rng"].value("stream", 0ULL);
    }
    return counts;
}

const char *to_string(Verdict v) {
    return v == Verdict::Detected ? "DETECTED" : "NOT_DETECTED_IN_BUDGET";
}

const char *to_string(ClassHint h) {
    switch (h) {
    case ClassHint::GhzLike:
        return "GHZ_LIKE";
    case ClassHint::WLike:
        return "W_LIKE";
    case ClassHint::Indeterminate:
        return "INDETERMINATE";
    }
    return "?";
}

const char *to_string(MimicVerdict v) {
    return v == MimicVerdict::W3Like ? "W3_LIKE" : "UNBALANCED_GHZ3";
}

} // namespace cswap
