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
//
// Closed-form control distributions for the CSWAP entanglement test,
// evaluated directly from state parameters. These serve as independent
// oracles against the circuit simulator: none of the functions here applies
// a gate. Squared parentheses are implemented as modulus-squares of plain
// amplitude products, so complex amplitudes are admitted; the real case is
// the literal reading.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cswap/control_distribution.hpp"
#include "cswap/engine.hpp"

namespace cswap {

// Analytic counterpart of ControlDistribution: the all-zeros probability,
// signature-class totals, and (when the family admits them) per-outcome
// values. p_zero + even_ones + odd_ones is always 1.
struct AnalyticDistribution {
    std::uint32_t n = 0;
    double p_zero = 0.0;
    double even_ones = 0.0;    // popcount even and >= 2
    double odd_ones = 0.0;     // popcount odd
    double exactly_one = 0.0;  // subset of odd_ones
    double exactly_two = 0.0;  // subset of even_ones
    std::optional<std::vector<double>> per_outcome; // indexed by control mask

    double class_total(SignatureClass c) const;
    std::map<SignatureClass, double> signature_classes() const;
};

// Two-qubit concurrence 2|A00 A11 - A01 A10| of a normalized 4-amplitude
// state. Amplitude k belongs to basis label k (bit 0 = qubit 0).
double concurrence2(std::span<const Complex, 4> amps);
double concurrence2(const StateVector &state);

// General two-qubit test/copy pair; per-outcome values included.
// Reduces to {1 - C2^2/4, 0, 0, C2^2/4} when a = b.
AnalyticDistribution two_qubit_distribution(std::span<const Complex, 4> a,
                                            std::span<const Complex, 4> b);

// General three-qubit equal pair; per-outcome values included, with exact
// zeros on the popcount-1 and popcount-3 outcomes.
AnalyticDistribution three_qubit_equal_distribution(std::span<const Complex, 8> a);

// Maximally entangled families: P0 = 1/2 + 1/2^n (GHZ), 1/2 + 1/(2n) (W);
// each GHZ signature outcome carries 1/2^n, each W two-ones outcome 1/n^2.
AnalyticDistribution ghz_maximal(std::uint32_t n);
AnalyticDistribution w_maximal(std::uint32_t n);

// Degree of entanglement C_n = 2 sqrt(P(even number of 1s, nonzero)).
double degree_cn(const AnalyticDistribution &dist);
double degree_cn(const ControlDistribution &dist);
double cn_max(std::uint32_t n); // upper limit 2 sqrt(1/2 - 1/2^n)

// --- GHZ-like states: alpha0|0...0> + alpha1|1...1> versus
//     beta0|0...0> + beta1|1...1> (amplitude route; per-outcome included).
// Equal copies are the balanced/unbalanced case, unequal copies the mixed
// one; odd outcomes vanish exactly when alpha = beta.
AnalyticDistribution ghz_like_distribution(std::uint32_t n, Complex alpha0, Complex alpha1,
                                           Complex beta0, Complex beta1);

// --- W-like states: sum_i a_i |0..1_i..0> versus sum_i b_i |0..1_i..0>
//     (amplitude route; per-outcome included). a[q] multiplies the basis
//     state with qubit q set.
AnalyticDistribution w_like_distribution(std::uint32_t n, std::span<const Complex> a,
                                         std::span<const Complex> b);

// Trigonometric forms of the error families. Each checks itself against the
// corresponding amplitude route and throws std::logic_error beyond 1e-12.
AnalyticDistribution unbalanced_ghz_dist(std::uint32_t n, double delta);
AnalyticDistribution unbalanced_w_dist(std::uint32_t n, double delta);
AnalyticDistribution unequal_ghz_dist(std::uint32_t n, Complex alpha0, Complex alpha1,
                                      Complex beta0, Complex beta1);
AnalyticDistribution unequal_ghz_dist_trig(std::uint32_t n, double delta);
AnalyticDistribution unequal_w_dist(std::uint32_t n, std::span<const Complex> a,
                                    std::span<const Complex> b);
AnalyticDistribution unequal_w_dist_trig(std::uint32_t n, double delta);
AnalyticDistribution corrupted_ghz_dist(std::uint32_t n, double phi);
AnalyticDistribution corrupted_w_dist(std::uint32_t n, double phi);

// Amplitude routes for the corrupted families, parametrized by the raw
// amplitudes: ghz_amp on each of |0...0>, |1...1> and extra_amp on the added
// basis state (GHZ case); w_amps on the single-excitation states and
// extra_amp on |0...0> (W case). Class totals only; per-outcome values for
// corrupted states come from the simulator.
AnalyticDistribution corrupted_ghz_amplitude_dist(std::uint32_t n, Complex ghz_amp,
                                                  Complex extra_amp);
AnalyticDistribution corrupted_w_amplitude_dist(std::uint32_t n, std::span<const Complex> w_amps,
                                                Complex extra_amp);

// Deviation of the family's signature-class total from its value at
// parameter 0, evaluated in a cancellation-free arrangement. Used to verify
// the leading-order error expressions.
double unbalanced_ghz_signature_deviation(std::uint32_t n, double delta);
double unbalanced_w_signature_deviation(std::uint32_t n, double delta);
double unequal_ghz_odd_total(std::uint32_t n, double delta);
double unequal_w_one_total(std::uint32_t n, double delta);
double corrupted_ghz_signature_deviation(std::uint32_t n, double phi);
double corrupted_w_signature_deviation(std::uint32_t n, double phi);

// Expected trials to the first entanglement signature: 1/p, or an empty
// optional when the signature probability is zero (undetectable input).
std::optional<double> expected_trials_any(double p_signature);

enum class EntanglementClassModel { GhzLike, WLike };

// Expected trials to establish genuine n-qubit entanglement:
// (1/p)^x(n) with x = 2^(n-2) for GHZ-like and (n-1)(n-2)/2 + 1 for W-like.
std::optional<double> expected_trials_genuine(std::uint32_t n, EntanglementClassModel model,
                                              double p_signature);
double genuine_trials_exponent(std::uint32_t n, EntanglementClassModel model);

// Quantum state tomography comparison baseline: exactly 3^n measurements.
std::uint64_t tomography_baseline(std::uint32_t n);

// C_n at which the expected CSWAP trial count crosses the tomography
// baseline: sqrt(4 / 3^n).
double tomography_crossover_cn(std::uint32_t n);

// Checks the degree against the average post-measurement concurrence after
// measuring one qubit of a 3-qubit state in the computational basis. Both
// inequality directions are reported; the paper writes the condition as
// C_n <= sum_j p_j C_{n-1}, the reverse of the usual monotone direction.
struct LoccCheckResult {
    double c3 = 0.0;              // degree of the input, from the simulated test
    double expected_post_c2 = 0.0; // sum_j p_j C_2(psi_j)
    bool holds_as_written = false; // c3 <= expected_post_c2
    bool holds_reversed = false;   // c3 >= expected_post_c2
};
LoccCheckResult locc_monotonicity_check(const StateVector &state, QubitIndex measured_qubit);

} // namespace cswap
