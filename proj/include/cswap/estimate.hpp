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
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cswap/control_distribution.hpp"
#include "cswap/engine.hpp"

namespace cswap {

// Seed/stream pair for reproducible sampling. A fixed (seed, stream) yields
// an identical outcome sequence on every platform: the generator is the
// standard mt19937_64 seeded through std::seed_seq, and uniform doubles are
// produced by the fixed 53-bit mapping (x >> 11) * 2^-53.
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

inline constexpr const char *kRngAlgorithm = "mt19937_64";

class Rng {
  public:
    explicit Rng(RngSpec spec);
    std::uint64_t next_u64() { return engine_(); }
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    const RngSpec &spec() const { return spec_; }

  private:
    RngSpec spec_;
    std::mt19937_64 engine_;
};

struct ShotCounts {
    std::uint32_t n = 0;
    std::vector<std::uint64_t> counts; // size 2^n, indexed by outcome mask
    std::uint64_t total_shots = 0;
    RngSpec rng;

    std::uint64_t count(std::uint64_t mask) const { return counts[mask]; }
    std::string to_json_text() const;
    static ShotCounts from_json_text(const std::string &text);
};

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

// I.i.d. categorical draws from the exact simulated distribution. The circuit
// is deterministic, so drawing from its distribution is statistically
// identical to re-running it per shot.
ShotCounts sample(const ControlDistribution &dist, std::uint64_t shots, RngSpec rng);

// Fraction of shots in the class, with binomial standard error.
Estimate estimate_signature_probability(const ShotCounts &counts, SignatureClass cls);

// 2 sqrt(p-hat) with first-order error propagation sigma_C = sigma_p / sqrt(p-hat);
// returns 0 +- 2/sqrt(shots) when no signature was observed.
Estimate estimate_cn(const ShotCounts &counts);

class UndetectableError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Empirical mean (and standard error) of the number of draws until the first
// entanglement signature, over `repetitions` independent repetitions.
// Throws UndetectableError when the distribution has no signature support.
Estimate trials_to_first_signature(const ControlDistribution &dist, RngSpec rng,
                                   std::uint64_t repetitions);

enum class Verdict { Detected, NotDetectedInBudget };
enum class ClassHint { GhzLike, WLike, Indeterminate };

struct EntanglementReport {
    Verdict entangled = Verdict::NotDetectedInBudget;
    std::set<std::string> signatures_seen; // outcome strings, popcount even >= 2
    Estimate c_n_estimate;
    bool unequal_copies_flag = false; // any odd-popcount outcome observed
    ClassHint class_hint = ClassHint::Indeterminate;
};

// Classifies observed counts: DETECTED iff a signature outcome was seen;
// the class hint is advisory (GHZ-like needs a popcount >= 4 signature,
// W-like only popcount-2 signatures with at least 4 signature observations).
EntanglementReport classify(const ShotCounts &counts);

const char *to_string(Verdict v);
const char *to_string(ClassHint h);

enum class MimicVerdict { UnbalancedGhz3, W3Like };

struct MimicResolution {
    MimicVerdict verdict = MimicVerdict::UnbalancedGhz3;
    std::uint64_t rounds = 0;
    std::uint64_t detections = 0; // |11> control outcomes observed
    double detection_rate = 0.0;
    double confidence = 0.0; // 1 - (1 - observed rate)^rounds
};

// Resolves the GHZ3/W3 mimic: per round, measure qubit 0 in the
// computational basis, collapse both copies identically (or independently
// when identical_collapse is false), run the two-qubit test on the
// remainder, and sample one control outcome. Any |11> outcome rules out an
// unbalanced GHZ3.
MimicResolution resolve_ghz3_w3_mimic(const StateVector &state, std::uint64_t rounds,
                                      RngSpec rng, bool identical_collapse = true);

const char *to_string(MimicVerdict v);

} // namespace cswap
