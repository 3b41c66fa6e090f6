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

#include "cswap/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace cswap {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

unsigned default_workers() {
    if (const char *env = std::getenv("CSWAP_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 64) {
            return static_cast<unsigned>(v);
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(hw, 1u, 4u);
}

std::atomic<unsigned> g_workers{0};

// Static partition of [0, count); every index is processed by exactly one
// worker, so results do not depend on the worker count.
template <typename Body> void parallel_for(std::uint64_t count, Body &&body) {
    const unsigned workers = parallel_workers();
    if (workers <= 1 || count < (1ULL << 18)) {
        body(0, count);
        return;
    }
    const std::uint64_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(count, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&body, begin, end] { body(begin, end); });
    }
    body(0, std::min(count, chunk));
    for (auto &t : pool) {
        t.join();
    }
}

// Inserts a zero bit at each of the given sorted mask positions.
inline std::uint64_t expand_index(std::uint64_t i, std::span<const std::uint64_t> sorted_masks) {
    for (std::uint64_t mask : sorted_masks) {
        i = ((i & ~(mask - 1)) << 1) | (i & (mask - 1));
    }
    return i;
}

void require(bool cond, const char *msg) {
    if (!cond) {
        throw std::invalid_argument(msg);
    }
}

} // namespace

std::uint32_t max_total_qubits() {
    static const std::uint32_t cap = [] {
        if (const char *env = std::getenv("CSWAP_MAX_QUBITS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 1 && v <= 34) {
                return static_cast<std::uint32_t>(v);
            }
        }
        return 24u;
    }();
    return cap;
}

unsigned parallel_workers() {
    unsigned w = g_workers.load(std::memory_order_relaxed);
    if (w == 0) {
        w = default_workers();
        g_workers.store(w, std::memory_order_relaxed);
    }
    return w;
}

void set_parallel_workers(unsigned workers) {
    g_workers.store(std::clamp(workers, 1u, 64u), std::memory_order_relaxed);
}

GateOp GateOp::hadamard(QubitIndex target) { return {Kind::H, {}, {target}}; }
GateOp GateOp::cnot(QubitIndex control, QubitIndex target) {
    return {Kind::Cnot, {control}, {target}};
}
GateOp GateOp::toffoli(QubitIndex c0, QubitIndex c1, QubitIndex target) {
    return {Kind::Toffoli, {c0, c1}, {target}};
}
GateOp GateOp::fredkin(QubitIndex control, QubitIndex t0, QubitIndex t1) {
    return {Kind::Fredkin, {control}, {t0, t1}};
}

StateVector::StateVector(std::uint32_t num_qubits) : num_qubits_(num_qubits) {
    require(num_qubits >= 1, "StateVector needs at least one qubit");
    if (num_qubits > max_total_qubits()) {
        throw CapacityError("requested " + std::to_string(num_qubits) +
                            " qubits exceeds the dense capacity of " +
                            std::to_string(max_total_qubits()));
    }
    amps_.assign(1ULL << num_qubits, Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

StateVector StateVector::basis_state(std::uint32_t num_qubits, std::uint64_t label) {
    StateVector s(num_qubits);
    if (label >= s.dim()) {
        throw std::invalid_argument("basis-state label out of range");
    }
    s.amps_[0] = Complex{0.0, 0.0};
    s.amps_[label] = Complex{1.0, 0.0};
    return s;
}

StateVector StateVector::from_amplitudes(std::uint32_t num_qubits, std::vector<Complex> amps) {
    StateVector s(num_qubits);
    require(amps.size() == s.dim(), "amplitude array must have exactly 2^m entries");
    s.amps_ = std::move(amps);
    return s;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Complex &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

void StateVector::normalize() {
    const double n = norm();
    if (n < 1e-150) {
        throw std::invalid_argument("cannot normalize a zero state");
    }
    const double inv = 1.0 / n;
    for (Complex &a : amps_) {
        a *= inv;
    }
}

void StateVector::fill_zero() { std::fill(amps_.begin(), amps_.end(), Complex{0.0, 0.0}); }

void StateVector::check_qubit(QubitIndex q) const {
    if (q >= num_qubits_) {
        throw std::invalid_argument("qubit index out of range");
    }
}

void StateVector::apply(const GateOp &gate) {
    switch (gate.kind) {
    case GateOp::Kind::H:
        apply_h(gate.targets.at(0));
        return;
    case GateOp::Kind::Cnot:
        apply_cnot(gate.controls.at(0), gate.targets.at(0));
        return;
    case GateOp::Kind::Toffoli:
        apply_toffoli(gate.controls.at(0), gate.controls.at(1), gate.targets.at(0));
        return;
    case GateOp::Kind::Fredkin:
        apply_fredkin(gate.controls.at(0), gate.targets.at(0), gate.targets.at(1));
        return;
    }
    throw std::invalid_argument("unknown gate kind");
}

void StateVector::apply_h(QubitIndex q) {
    check_qubit(q);
    const std::uint64_t mask = 1ULL << q;
    const std::uint64_t lo = mask - 1;
    Complex *amps = amps_.data();
    parallel_for(dim() >> 1, [=](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint64_t i0 = ((i & ~lo) << 1) | (i & lo);
            const std::uint64_t i1 = i0 | mask;
            const Complex a0 = amps[i0];
            const Complex a1 = amps[i1];
            amps[i0] = (a0 + a1) * kInvSqrt2;
            amps[i1] = (a0 - a1) * kInvSqrt2;
        }
    });
}

void StateVector::apply_h_layer(std::span<const QubitIndex> qubits) {
    if (qubits.empty()) {
        return;
    }
    const std::uint32_t k = static_cast<std::uint32_t>(qubits.size());
    bool top_block = k <= num_qubits_;
    for (std::uint32_t j = 0; top_block && j < k; ++j) {
        top_block = qubits[j] == num_qubits_ - k + j;
    }
    if (!top_block || k < 2 || k > 8 || num_qubits_ - k < 8 || dim() < (1ULL << 20)) {
        for (QubitIndex q : qubits) {
            apply_h(q);
        }
        return;
    }
    // Fused pass over the top-k-qubit fibers; per fiber the per-qubit
    // butterflies run in the same order as sequential apply_h calls, so the
    // result is bitwise identical.
    const std::uint32_t shift = num_qubits_ - k;
    const std::uint64_t base_count = 1ULL << shift;
    const std::uint64_t rows = 1ULL << k;
    constexpr std::uint64_t kBlock = 128;
    Complex *amps = amps_.data();
    parallel_for(base_count / kBlock, [=](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t blk = begin; blk < end; ++blk) {
            const std::uint64_t b0 = blk * kBlock;
            for (std::uint32_t j = 0; j < k; ++j) {
                const std::uint64_t bit = 1ULL << j;
                for (std::uint64_t t = 0; t < rows; ++t) {
                    if (t & bit) {
                        continue;
                    }
                    Complex *row0 = amps + ((t << shift) | b0);
                    Complex *row1 = amps + (((t | bit) << shift) | b0);
                    for (std::uint64_t c = 0; c < kBlock; ++c) {
                        const Complex a0 = row0[c];
                        const Complex a1 = row1[c];
                        row0[c] = (a0 + a1) * kInvSqrt2;
                        row1[c] = (a0 - a1) * kInvSqrt2;
                    }
                }
            }
        }
    });
}

void StateVector::apply_cnot(QubitIndex control, QubitIndex target) {
    check_qubit(control);
    check_qubit(target);
    require(control != target, "CNOT control and target must differ");
    const std::uint64_t cm = 1ULL << control;
    const std::uint64_t tm = 1ULL << target;
    const std::array<std::uint64_t, 2> masks{std::min(cm, tm), std::max(cm, tm)};
    Complex *amps = amps_.data();
    parallel_for(dim() >> 2, [=](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint64_t idx = expand_index(i, masks) | cm;
            std::swap(amps[idx], amps[idx | tm]);
        }
    });
}

void StateVector::apply_toffoli(QubitIndex c0, QubitIndex c1, QubitIndex target) {
    check_qubit(c0);
    check_qubit(c1);
    check_qubit(target);
    require(c0 != c1 && c0 != target && c1 != target, "Toffoli qubits must be distinct");
    const std::uint64_t c0m = 1ULL << c0;
    const std::uint64_t c1m = 1ULL << c1;
    const std::uint64_t tm = 1ULL << target;
    std::array<std::uint64_t, 3> masks{c0m, c1m, tm};
    std::sort(masks.begin(), masks.end());
    Complex *amps = amps_.data();
    parallel_for(dim() >> 3, [=](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint64_t idx = expand_index(i, masks) | c0m | c1m;
            std::swap(amps[idx], amps[idx | tm]);
        }
    });
}

void StateVector::apply_fredkin(QubitIndex control, QubitIndex t0, QubitIndex t1) {
    check_qubit(control);
    check_qubit(t0);
    check_qubit(t1);
    require(control != t0 && control != t1 && t0 != t1, "Fredkin qubits must be distinct");
    const std::uint64_t cm = 1ULL << control;
    const std::uint64_t t0m = 1ULL << t0;
    const std::uint64_t t1m = 1ULL << t1;
    std::array<std::uint64_t, 3> masks{cm, t0m, t1m};
    std::sort(masks.begin(), masks.end());
    Complex *amps = amps_.data();
    parallel_for(dim() >> 3, [=](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint64_t idx = expand_index(i, masks) | cm;
            std::swap(amps[idx | t0m], amps[idx | t1m]);
        }
    });
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    const std::uint32_t m = a.num_qubits() + b.num_qubits();
    if (m > max_total_qubits()) {
        throw CapacityError("tensor product would exceed the dense capacity of " +
                            std::to_string(max_total_qubits()) + " qubits");
    }
    StateVector out(m);
    out[0] = Complex{0.0, 0.0};
    const std::uint32_t na = a.num_qubits();
    for (std::uint64_t j = 0; j < b.dim(); ++j) {
        const Complex bj = b[j];
        if (bj == Complex{0.0, 0.0}) {
            continue;
        }
        const std::uint64_t base = j << na;
        for (std::uint64_t i = 0; i < a.dim(); ++i) {
            out[base | i] = a[i] * bj;
        }
    }
    return out;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    require(a.num_qubits() == b.num_qubits(), "inner product needs equal qubit counts");
    Complex total{0.0, 0.0};
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

std::vector<double> marginal_distribution(const StateVector &state,
                                          std::span<const QubitIndex> qubits) {
    require(!qubits.empty(), "marginal needs at least one qubit");
    const std::uint32_t k = static_cast<std::uint32_t>(qubits.size());
    require(k <= state.num_qubits(), "too many qubits for marginal");
    std::uint64_t seen = 0;
    for (QubitIndex q : qubits) {
        require(q < state.num_qubits(), "marginal qubit out of range");
        require((seen & (1ULL << q)) == 0, "marginal qubits must be distinct");
        seen |= 1ULL << q;
    }
    std::vector<double> out(1ULL << k, 0.0);

    bool contiguous = true;
    for (std::uint32_t j = 0; j < k; ++j) {
        contiguous = contiguous && qubits[j] == qubits[0] + j;
    }
    if (contiguous) {
        const std::uint32_t shift = qubits[0];
        const std::uint64_t key_mask = (1ULL << k) - 1;
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            out[(i >> shift) & key_mask] += std::norm(state[i]);
        }
        return out;
    }
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        std::uint64_t key = 0;
        for (std::uint32_t j = 0; j < k; ++j) {
            key |= ((i >> qubits[j]) & 1ULL) << j;
        }
        out[key] += std::norm(state[i]);
    }
    return out;
}

MeasurementOutcome project_qubit(const StateVector &state, QubitIndex q, int outcome) {
    require(q < state.num_qubits(), "projected qubit out of range");
    require(outcome == 0 || outcome == 1, "measurement outcome must be 0 or 1");
    require(state.num_qubits() >= 2, "projection needs at least two qubits");
    const std::uint64_t mask = 1ULL << q;
    const std::uint64_t lo = mask - 1;
    const std::uint64_t selected = outcome ? mask : 0;

    double p = 0.0;
    for (std::uint64_t i = 0; i < state.dim() >> 1; ++i) {
        const std::uint64_t orig = (((i & ~lo) << 1) | (i & lo)) | selected;
        p += std::norm(state[orig]);
    }
    MeasurementOutcome result;
    result.probability = p;
    if (p < 1e-30) {
        return result;
    }
    const double inv = 1.0 / std::sqrt(p);
    std::vector<Complex> reduced(state.dim() >> 1);
    for (std::uint64_t i = 0; i < reduced.size(); ++i) {
        const std::uint64_t orig = (((i & ~lo) << 1) | (i & lo)) | selected;
        reduced[i] = state[orig] * inv;
    }
    result.state = StateVector::from_amplitudes(state.num_qubits() - 1, std::move(reduced));
    return result;
}

} // namespace cswap
