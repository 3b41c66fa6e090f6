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

#include "cswap/oracles.hpp"

#include <cmath>
#include <stdexcept>

#include "cswap/circuit.hpp"

namespace cswap {

namespace {

void require(bool cond, const char *msg) {
    if (!cond) {
        throw std::invalid_argument(msg);
    }
}

double pow2neg(std::uint32_t n) { return std::ldexp(1.0, -static_cast<int>(n)); }

// |z|^2 of a plain product expression.
double msq(const Complex &z) { return std::norm(z); }

std::uint64_t even_nonzero_count(std::uint32_t n) { return (1ULL << (n - 1)) - 1; }

void check_pair_normalized(double norm_a, double norm_b) {
    if (std::abs(norm_a - 1.0) > 1e-9 || std::abs(norm_b - 1.0) > 1e-9) {
        throw std::invalid_argument("oracle inputs must be normalized");
    }
}

void fill_totals_from_outcomes(AnalyticDistribution &dist) {
    const std::vector<double> &p = *dist.per_outcome;
    dist.p_zero = p[0];
    dist.even_ones = dist.odd_ones = dist.exactly_one = dist.exactly_two = 0.0;
    for (std::uint64_t mask = 1; mask < p.size(); ++mask) {
        const int pc = std::popcount(mask);
        if (pc % 2 == 0) {
            dist.even_ones += p[mask];
        } else {
            dist.odd_ones += p[mask];
        }
        if (pc == 1) {
            dist.exactly_one += p[mask];
        } else if (pc == 2) {
            dist.exactly_two += p[mask];
        }
    }
}

void check_forms_agree(const AnalyticDistribution &trig, const AnalyticDistribution &amp,
                       const char *family) {
    const double gap = std::max({std::abs(trig.p_zero - amp.p_zero),
                                 std::abs(trig.even_ones - amp.even_ones),
                                 std::abs(trig.odd_ones - amp.odd_ones)});
    if (gap > 1e-12) {
        throw std::logic_error(std::string("trigonometric and amplitude forms disagree for ") +
                               family);
    }
}

std::vector<Complex> unbalanced_w_amplitudes(std::uint32_t n, double delta) {
    const double dn = static_cast<double>(n);
    const double c = std::cos(delta);
    std::vector<Complex> b(n, std::sqrt(1.0 / (dn - 1.0) - c * c / (dn * (dn - 1.0))));
    b[0] = c / std::sqrt(dn);
    return b;
}

} // namespace

double AnalyticDistribution::class_total(SignatureClass c) const {
    switch (c) {
    case SignatureClass::AllZero:
        return p_zero;
    case SignatureClass::EvenOnes:
        return even_ones;
    case SignatureClass::ExactlyOneOne:
        return exactly_one;
    case SignatureClass::ExactlyTwoOnes:
        return exactly_two;
    case SignatureClass::OddOnes:
        return odd_ones;
    }
    return 0.0;
}

std::map<SignatureClass, double> AnalyticDistribution::signature_classes() const {
    return {{SignatureClass::AllZero, p_zero},
            {SignatureClass::EvenOnes, even_ones},
            {SignatureClass::ExactlyOneOne, exactly_one},
            {SignatureClass::ExactlyTwoOnes, exactly_two},
            {SignatureClass::OddOnes, odd_ones}};
}

double concurrence2(std::span<const Complex, 4> amps) {
    return 2.0 * std::abs(amps[0] * amps[3] - amps[1] * amps[2]);
}

double concurrence2(const StateVector &state) {
    require(state.num_qubits() == 2, "concurrence needs a two-qubit state");
    return 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
}

AnalyticDistribution two_qubit_distribution(std::span<const Complex, 4> a,
                                            std::span<const Complex, 4> b) {
    double na = 0.0;
    double nb = 0.0;
    for (int i = 0; i < 4; ++i) {
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
    }
    check_pair_normalized(na, nb);

    AnalyticDistribution dist;
    dist.n = 2;
    std::vector<double> p(4, 0.0);
    // Outcome mask bit i is the control paired with test qubit i.
    p[0] = 0.25 * (4.0 * (msq(a[0] * b[0]) + msq(a[1] * b[1]) + msq(a[2] * b[2]) +
                          msq(a[3] * b[3])) +
                   2.0 * msq(a[0] * b[1] + a[1] * b[0]) + 2.0 * msq(a[0] * b[2] + a[2] * b[0]) +
                   2.0 * msq(a[1] * b[3] + a[3] * b[1]) + 2.0 * msq(a[2] * b[3] + a[3] * b[2]) +
                   msq(a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]));
    p[1] = 0.25 * (2.0 * msq(a[0] * b[1] - a[1] * b[0]) + 2.0 * msq(a[2] * b[3] - a[3] * b[2]) +
                   msq(a[0] * b[3] - a[1] * b[2] + a[2] * b[1] - a[3] * b[0]));
    p[2] = 0.25 * (2.0 * msq(a[0] * b[2] - a[2] * b[0]) + 2.0 * msq(a[1] * b[3] - a[3] * b[1]) +
                   msq(a[0] * b[3] + a[1] * b[2] - a[2] * b[1] - a[3] * b[0]));
    p[3] = 0.25 * msq(a[0] * b[3] - a[1] * b[2] - a[2] * b[1] + a[3] * b[0]);
    dist.per_outcome = std::move(p);
    fill_totals_from_outcomes(dist);
    return dist;
}

AnalyticDistribution three_qubit_equal_distribution(std::span<const Complex, 8> a) {
    double na = 0.0;
    for (int i = 0; i < 8; ++i) {
        na += std::norm(a[i]);
    }
    check_pair_normalized(na, 1.0);

    auto m2 = [&](int i) { return std::norm(a[i]); };
    AnalyticDistribution dist;
    dist.n = 3;
    std::vector<double> p(8, 0.0);
    p[0] = 0.5 * (2.0 * (m2(0) * m2(0) + m2(1) * m2(1) + m2(2) * m2(2) + m2(3) * m2(3) +
                         m2(4) * m2(4) + m2(5) * m2(5) + m2(6) * m2(6) + m2(7) * m2(7)) +
                  4.0 * m2(0) * (m2(1) + m2(2) + m2(4)) + 4.0 * m2(3) * (m2(1) + m2(2) + m2(7)) +
                  4.0 * m2(5) * (m2(1) + m2(4) + m2(7)) + 4.0 * m2(6) * (m2(2) + m2(4) + m2(7)) +
                  2.0 * msq(a[0] * a[3] + a[1] * a[2]) + 2.0 * msq(a[0] * a[5] + a[1] * a[4]) +
                  2.0 * msq(a[0] * a[6] + a[2] * a[4]) + 2.0 * msq(a[1] * a[7] + a[3] * a[5]) +
                  2.0 * msq(a[2] * a[7] + a[3] * a[6]) + 2.0 * msq(a[4] * a[7] + a[5] * a[6]) +
                  msq(a[0] * a[7] + a[1] * a[6] + a[2] * a[5] + a[3] * a[4]));
    // Controls 0 and 1 on: the pair of test qubits {0, 1} was swapped.
    p[3] = 0.5 * (2.0 * msq(a[0] * a[3] - a[1] * a[2]) + 2.0 * msq(a[4] * a[7] - a[5] * a[6]) +
                  msq(a[0] * a[7] - a[1] * a[6] - a[2] * a[5] + a[3] * a[4]));
    p[5] = 0.5 * (2.0 * msq(a[0] * a[5] - a[1] * a[4]) + 2.0 * msq(a[2] * a[7] - a[3] * a[6]) +
                  msq(a[0] * a[7] - a[1] * a[6] + a[2] * a[5] - a[3] * a[4]));
    p[6] = 0.5 * (2.0 * msq(a[0] * a[6] - a[2] * a[4]) + 2.0 * msq(a[1] * a[7] - a[3] * a[5]) +
                  msq(a[0] * a[7] + a[1] * a[6] - a[2] * a[5] - a[3] * a[4]));
    dist.per_outcome = std::move(p);
    fill_totals_from_outcomes(dist);
    return dist;
}

AnalyticDistribution ghz_maximal(std::uint32_t n) {
    require(n >= 2, "GHZ distribution needs n >= 2");
    AnalyticDistribution dist;
    dist.n = n;
    const double inv2n = pow2neg(n);
    dist.p_zero = 0.5 + inv2n;
    dist.even_ones = 0.5 - inv2n;
    if (n <= 16) {
        std::vector<double> p(1ULL << n, 0.0);
        p[0] = dist.p_zero;
        for (std::uint64_t mask = 1; mask < p.size(); ++mask) {
            const int pc = std::popcount(mask);
            if (pc >= 2 && pc % 2 == 0) {
                p[mask] = inv2n;
                if (pc == 2) {
                    dist.exactly_two += inv2n;
                }
            }
        }
        dist.per_outcome = std::move(p);
    } else {
        dist.exactly_two = static_cast<double>(n) * (n - 1) / 2.0 * inv2n;
    }
    return dist;
}

AnalyticDistribution w_maximal(std::uint32_t n) {
    require(n >= 2, "W distribution needs n >= 2");
    AnalyticDistribution dist;
    dist.n = n;
    const double dn = static_cast<double>(n);
    dist.p_zero = 0.5 + 0.5 / dn;
    dist.even_ones = 0.5 - 0.5 / dn;
    dist.exactly_two = dist.even_ones;
    if (n <= 16) {
        std::vector<double> p(1ULL << n, 0.0);
        p[0] = dist.p_zero;
        for (std::uint32_t q1 = 0; q1 < n; ++q1) {
            for (std::uint32_t q2 = q1 + 1; q2 < n; ++q2) {
                p[(1ULL << q1) | (1ULL << q2)] = 1.0 / (dn * dn);
            }
        }
        dist.per_outcome = std::move(p);
    }
    return dist;
}

double degree_cn(const AnalyticDistribution &dist) {
    return 2.0 * std::sqrt(std::max(0.0, dist.even_ones));
}

double degree_cn(const ControlDistribution &dist) {
    return 2.0 * std::sqrt(std::max(0.0, dist.class_total(SignatureClass::EvenOnes)));
}

double cn_max(std::uint32_t n) { return 2.0 * std::sqrt(0.5 - pow2neg(n)); }

AnalyticDistribution ghz_like_distribution(std::uint32_t n, Complex alpha0, Complex alpha1,
                                           Complex beta0, Complex beta1) {
    require(n >= 2, "GHZ-like distribution needs n >= 2");
    check_pair_normalized(std::norm(alpha0) + std::norm(alpha1),
                          std::norm(beta0) + std::norm(beta1));
    const double inv2n = pow2neg(n);
    const double plus = msq(alpha0 * beta1 + alpha1 * beta0);
    const double minus = msq(alpha0 * beta1 - alpha1 * beta0);

    AnalyticDistribution dist;
    dist.n = n;
    dist.p_zero = msq(alpha0 * beta0) + msq(alpha1 * beta1) + inv2n * plus;
    dist.even_ones = static_cast<double>(even_nonzero_count(n)) * inv2n * plus;
    dist.odd_ones = 0.5 * minus;
    dist.exactly_one = static_cast<double>(n) * inv2n * minus;
    dist.exactly_two = static_cast<double>(n) * (n - 1) / 2.0 * inv2n * plus;
    if (n <= 16) {
        std::vector<double> p(1ULL << n, 0.0);
        p[0] = dist.p_zero;
        for (std::uint64_t mask = 1; mask < p.size(); ++mask) {
            p[mask] = inv2n * (std::popcount(mask) % 2 == 0 ? plus : minus);
        }
        dist.per_outcome = std::move(p);
    }
    return dist;
}

AnalyticDistribution w_like_distribution(std::uint32_t n, std::span<const Complex> a,
                                         std::span<const Complex> b) {
    require(n >= 2, "W-like distribution needs n >= 2");
    require(a.size() == n && b.size() == n, "W-like amplitudes need one entry per qubit");
    double na = 0.0;
    double nb = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
    }
    check_pair_normalized(na, nb);

    AnalyticDistribution dist;
    dist.n = n;
    std::vector<double> p(n <= 16 ? (1ULL << n) : 0, 0.0);

    double p_zero = 0.0;
    for (std::uint32_t i = 0; i < n; ++i) {
        p_zero += msq(a[i] * b[i]);
        double single = 0.0;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            p_zero += 0.125 * msq(a[i] * b[j] + a[j] * b[i]);
            single += 0.25 * msq(a[i] * b[j] - a[j] * b[i]);
        }
        dist.exactly_one += single;
        if (!p.empty()) {
            p[1ULL << i] = single;
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            const double pair = 0.25 * msq(a[i] * b[j] + a[j] * b[i]);
            dist.exactly_two += pair;
            if (!p.empty()) {
                p[(1ULL << i) | (1ULL << j)] = pair;
            }
        }
    }
    dist.p_zero = p_zero;
    dist.even_ones = dist.exactly_two;
    dist.odd_ones = dist.exactly_one;
    if (!p.empty()) {
        p[0] = p_zero;
        dist.per_outcome = std::move(p);
    }
    return dist;
}

AnalyticDistribution unbalanced_ghz_dist(std::uint32_t n, double delta) {
    require(n >= 2, "unbalanced GHZ needs n >= 2");
    const double inv2n = pow2neg(n);
    const double c = std::cos(delta);
    const double s = std::sin(delta);
    const double dev = (2.0 - 4.0 * inv2n) * c * c * s * s;

    AnalyticDistribution dist;
    dist.n = n;
    dist.p_zero = (0.5 + inv2n) + dev;
    dist.even_ones = (0.5 - inv2n) - dev;
    const double c2d = std::cos(2.0 * delta);
    const double even_each = c2d * c2d * inv2n;
    dist.exactly_two = static_cast<double>(n) * (n - 1) / 2.0 * even_each;
    if (n <= 16) {
        std::vector<double> p(1ULL << n, 0.0);
        p[0] = dist.p_zero;
        for (std::uint64_t mask = 1; mask < p.size(); ++mask) {
            const int pc = std::popcount(mask);
            if (pc >= 2 && pc % 2 == 0) {
                p[mask] = even_each;
            }
        }
        dist.per_outcome = std::move(p);
    }

    const Complex a0 = std::sin(0.25 * 3.14159265358979323846 + delta);
    const Complex a1 = std::cos(0.25 * 3.14159265358979323846 + delta);
    check_forms_agree(dist, ghz_like_distribution(n, a0, a1, a0, a1), "unbalanced GHZ");
    return dist;
}

AnalyticDistribution unbalanced_w_dist(std::uint32_t n, double delta) {
    require(n >= 2, "unbalanced W needs n >= 2");
    const double dn = static_cast<double>(n);
    const double s2 = std::sin(delta) * std::sin(delta);

    AnalyticDistribution dist;
    dist.n = n;
    dist.even_ones = (dn - 1.0) / (2.0 * dn) - s2 * s2 / (2.0 * dn * (dn - 1.0));
    dist.exactly_two = dist.even_ones;
    dist.p_zero = 1.0 - dist.even_ones;

    const auto b = unbalanced_w_amplitudes(n, delta);
    check_forms_agree(dist, w_like_distribution(n, b, b), "unbalanced W");
    return dist;
}

AnalyticDistribution unequal_ghz_dist(std::uint32_t n, Complex alpha0, Complex alpha1,
                                      Complex beta0, Complex beta1) {
    return ghz_like_distribution(n, alpha0, alpha1, beta0, beta1);
}

AnalyticDistribution unequal_ghz_dist_trig(std::uint32_t n, double delta) {
    require(n >= 2, "unequal GHZ needs n >= 2");
    const double inv2n = pow2neg(n);
    const double s2 = std::sin(delta) * std::sin(delta);
    const double c2 = std::cos(delta) * std::cos(delta);

    AnalyticDistribution dist;
    dist.n = n;
    dist.p_zero = (0.5 + inv2n) - inv2n * s2;
    dist.odd_ones = 0.5 * s2;
    dist.even_ones = (0.5 - inv2n) - (0.5 - inv2n) * s2;
    dist.exactly_one = static_cast<double>(n) * inv2n * s2;
    dist.exactly_two = static_cast<double>(n) * (n - 1) / 2.0 * inv2n * c2;
    if (n <= 16) {
        std::vector<double> p(1ULL << n, 0.0);
        p[0] = dist.p_zero;
        for (std::uint64_t mask = 1; mask < p.size(); ++mask) {
            p[mask] = inv2n * (std::popcount(mask) % 2 == 0 ? c2 : s2);
        }
        dist.per_outcome = std::move(p);
    }

    const double quarter_pi = 0.25 * 3.14159265358979323846;
    const double r = 1.0 / std::sqrt(2.0);
    check_forms_agree(dist,
                      ghz_like_distribution(n, r, r, std::sin(quarter_pi + delta),
                                            std::cos(quarter_pi + delta)),
                      "unequal GHZ");
    return dist;
}

AnalyticDistribution unequal_w_dist(std::uint32_t n, std::span<const Complex> a,
                                    std::span<const Complex> b) {
    return w_like_distribution(n, a, b);
}

AnalyticDistribution unequal_w_dist_trig(std::uint32_t n, double delta) {
    require(n >= 2, "unequal W needs n >= 2");
    const double dn = static_cast<double>(n);
    const double c = std::cos(delta);
    const double s2 = std::sin(delta) * std::sin(delta);
    const double g = std::sqrt(1.0 + s2 / (dn - 1.0));
    const double bracket = (g - c) * (g - c);
    const double x = (dn - 1.0) / (dn * dn);

    AnalyticDistribution dist;
    dist.n = n;
    dist.p_zero = (0.5 + 0.5 / dn) - 0.25 * x * bracket;
    dist.exactly_one = 0.5 * x * bracket;
    dist.odd_ones = dist.exactly_one;
    dist.exactly_two = (0.5 - 0.5 / dn) - 0.25 * x * bracket;
    dist.even_ones = dist.exactly_two;

    std::vector<Complex> wa(n, Complex{1.0 / std::sqrt(dn), 0.0});
    check_forms_agree(dist, w_like_distribution(n, wa, unbalanced_w_amplitudes(n, delta)),
                      "unequal W");
    return dist;
}

AnalyticDistribution corrupted_ghz_dist(std::uint32_t n, double phi) {
    require(n >= 2, "corrupted GHZ needs n >= 2");
    const double inv2n = pow2neg(n);
    const double s2 = std::sin(phi) * std::sin(phi);
    const double dev = inv2n * s2 * (2.0 + (std::ldexp(1.0, static_cast<int>(n) - 1) - 3.0) * s2);

    AnalyticDistribution dist;
    dist.n = n;
    dist.p_zero = (0.5 + inv2n) + dev;
    dist.even_ones = (0.5 - inv2n) - dev;
    // Two-ones subtotal and per-outcome values are left to the simulator:
    // the added basis state splits the even outcomes into two levels.

    check_forms_agree(dist,
                      corrupted_ghz_amplitude_dist(n, std::cos(phi) / std::sqrt(2.0),
                                                   std::sin(phi)),
                      "corrupted GHZ");
    return dist;
}

AnalyticDistribution corrupted_w_dist(std::uint32_t n, double phi) {
    require(n >= 2, "corrupted W needs n >= 2");
    const double dn = static_cast<double>(n);
    const double s2 = std::sin(phi) * std::sin(phi);
    const double dev = (dn - 1.0) / (2.0 * dn) * s2 * (2.0 - s2);

    AnalyticDistribution dist;
    dist.n = n;
    dist.p_zero = (0.5 + 0.5 / dn) + dev;
    dist.even_ones = (0.5 - 0.5 / dn) - dev;
    dist.exactly_two = dist.even_ones;

    std::vector<Complex> wa(n, Complex{std::cos(phi) / std::sqrt(dn), 0.0});
    check_forms_agree(dist, corrupted_w_amplitude_dist(n, wa, std::sin(phi)), "corrupted W");
    return dist;
}

AnalyticDistribution corrupted_ghz_amplitude_dist(std::uint32_t n, Complex ghz_amp,
                                                  Complex extra_amp) {
    require(n >= 2, "corrupted GHZ needs n >= 2");
    const double T = std::norm(ghz_amp);
    const double S = std::norm(extra_amp);
    check_pair_normalized(2.0 * T + S, 1.0);
    const double inv2n = pow2neg(n);

    // Sector sums of the final state: the two GHZ poles interfere on every
    // even outcome, the pole opposite the added state only on outcomes whose
    // added-qubit control reads 0.
    const double pole_pair = 4.0 * T * T * inv2n;     // per even outcome
    const double pole_extra = 8.0 * T * S * inv2n;    // per even outcome avoiding the extra qubit
    const std::uint64_t all_even = even_nonzero_count(n);
    const std::uint64_t avoiding = (n >= 2) ? (1ULL << (n - 2)) - 1 : 0;

    AnalyticDistribution dist;
    dist.n = n;
    dist.p_zero = 2.0 * T * T + S * S + 2.0 * T * S + pole_pair + pole_extra;
    dist.even_ones = static_cast<double>(all_even) * pole_pair +
                     static_cast<double>(avoiding) * pole_extra;
    return dist;
}

AnalyticDistribution corrupted_w_amplitude_dist(std::uint32_t n, std::span<const Complex> w_amps,
                                                Complex extra_amp) {
    require(n >= 2, "corrupted W needs n >= 2");
    require(w_amps.size() == n, "corrupted W needs one amplitude per qubit");
    double total = std::norm(extra_amp);
    for (const Complex &a : w_amps) {
        total += std::norm(a);
    }
    check_pair_normalized(total, 1.0);

    AnalyticDistribution dist;
    dist.n = n;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            dist.exactly_two += msq(w_amps[i] * w_amps[j]);
        }
    }
    dist.even_ones = dist.exactly_two;
    dist.p_zero = 1.0 - dist.even_ones;
    return dist;
}

double unbalanced_ghz_signature_deviation(std::uint32_t n, double delta) {
    const double c = std::cos(delta);
    const double s = std::sin(delta);
    return -(2.0 - 4.0 * pow2neg(n)) * c * c * s * s;
}

double unbalanced_w_signature_deviation(std::uint32_t n, double delta) {
    const double dn = static_cast<double>(n);
    const double s2 = std::sin(delta) * std::sin(delta);
    return -s2 * s2 / (2.0 * dn * (dn - 1.0));
}

double unequal_ghz_odd_total(std::uint32_t, double delta) {
    const double s = std::sin(delta);
    return 0.5 * s * s;
}

double unequal_w_one_total(std::uint32_t n, double delta) {
    const double dn = static_cast<double>(n);
    const double g = std::sqrt(1.0 + std::sin(delta) * std::sin(delta) / (dn - 1.0));
    const double diff = g - std::cos(delta);
    return 0.5 * (dn - 1.0) / (dn * dn) * diff * diff;
}

double corrupted_ghz_signature_deviation(std::uint32_t n, double phi) {
    const double s2 = std::sin(phi) * std::sin(phi);
    return -pow2neg(n) * s2 * (2.0 + (std::ldexp(1.0, static_cast<int>(n) - 1) - 3.0) * s2);
}

double corrupted_w_signature_deviation(std::uint32_t n, double phi) {
    const double dn = static_cast<double>(n);
    const double s2 = std::sin(phi) * std::sin(phi);
    return -(dn - 1.0) / (2.0 * dn) * s2 * (2.0 - s2);
}

std::optional<double> expected_trials_any(double p_signature) {
    require(p_signature >= 0.0 && p_signature <= 1.0 + 1e-12,
            "signature probability must lie in [0, 1]");
    if (p_signature <= 0.0) {
        return std::nullopt;
    }
    return 1.0 / p_signature;
}

double genuine_trials_exponent(std::uint32_t n, EntanglementClassModel model) {
    require(n >= 2, "genuine-entanglement exponent needs n >= 2");
    if (model == EntanglementClassModel::GhzLike) {
        return std::ldexp(1.0, static_cast<int>(n) - 2);
    }
    const double dn = static_cast<double>(n);
    return 0.5 * (dn - 1.0) * (dn - 2.0) + 1.0;
}

std::optional<double> expected_trials_genuine(std::uint32_t n, EntanglementClassModel model,
                                              double p_signature) {
    require(p_signature >= 0.0 && p_signature <= 1.0 + 1e-12,
            "signature probability must lie in [0, 1]");
    if (p_signature <= 0.0) {
        return std::nullopt;
    }
    return std::pow(1.0 / p_signature, genuine_trials_exponent(n, model));
}

std::uint64_t tomography_baseline(std::uint32_t n) {
    require(n >= 1 && n <= 40, "tomography baseline supports n in [1, 40]");
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        result *= 3;
    }
    return result;
}

double tomography_crossover_cn(std::uint32_t n) {
    return std::sqrt(4.0 / static_cast<double>(tomography_baseline(n)));
}

LoccCheckResult locc_monotonicity_check(const StateVector &state, QubitIndex measured_qubit) {
    require(state.num_qubits() == 3, "LOCC check expects a 3-qubit state");
    require(measured_qubit < 3, "measured qubit out of range");

    LoccCheckResult result;
    result.c3 = degree_cn(run_entanglement_test(state, state).control_dist);

    for (int outcome = 0; outcome < 2; ++outcome) {
        const MeasurementOutcome branch = project_qubit(state, measured_qubit, outcome);
        if (!branch.state) {
            continue;
        }
        result.expected_post_c2 += branch.probability * concurrence2(*branch.state);
    }
    result.holds_as_written = result.c3 <= result.expected_post_c2 + 1e-9;
    result.holds_reversed = result.c3 >= result.expected_post_c2 - 1e-9;
    return result;
}

} // namespace cswap
