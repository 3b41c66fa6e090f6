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

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cswap/common.hpp"

namespace cswap {

// Outcome families over control bitstrings; membership depends only on the
// popcount. EvenOnes means a nonzero even count: the all-zeros outcome is the
// non-signature outcome and is never part of a signature class.
enum class SignatureClass {
    AllZero,
    EvenOnes,       // popcount even and >= 2
    ExactlyOneOne,  // popcount == 1 (subset of OddOnes)
    ExactlyTwoOnes, // popcount == 2 (subset of EvenOnes)
    OddOnes,        // popcount odd
};

inline bool in_class(SignatureClass c, std::uint64_t outcome_mask) {
    const int pc = std::popcount(outcome_mask);
    switch (c) {
    case SignatureClass::AllZero:
        return pc == 0;
    case SignatureClass::EvenOnes:
        return pc >= 2 && pc % 2 == 0;
    case SignatureClass::ExactlyOneOne:
        return pc == 1;
    case SignatureClass::ExactlyTwoOnes:
        return pc == 2;
    case SignatureClass::OddOnes:
        return pc % 2 == 1;
    }
    return false;
}

// A nonzero outcome with an even number of 1s evidences entanglement when the
// copy equals the test state.
inline bool is_signature(std::uint64_t outcome_mask) {
    return in_class(SignatureClass::EvenOnes, outcome_mask);
}

const char *to_string(SignatureClass c);

// Probability per n-bit control outcome. Outcomes are indexed by mask, where
// bit i is the control qubit paired with test qubit i; in the string form,
// character i (leftmost = i = 0) carries that bit.
struct ControlDistribution {
    std::uint32_t n = 0;
    std::vector<double> probs; // size 2^n, indexed by outcome mask

    // Clamps entries below kProbabilityClamp to exactly 0 and validates that
    // the total is 1 within kAggregateTolerance.
    static ControlDistribution from_probabilities(std::uint32_t n, std::vector<double> probs);

    double prob(std::uint64_t mask) const { return probs[mask]; }
    double sum() const;
    double class_total(SignatureClass c) const;
    std::string outcome_string(std::uint64_t mask) const;
    std::map<std::string, double> as_map(bool include_zeros = false) const;
};

} // namespace cswap
