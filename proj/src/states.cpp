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

#include "cswap/states.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace cswap {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool cond, const std::string &msg) {
    if (!cond) {
        throw std::invalid_argument(msg);
    }
}

std::vector<Complex> zeros(std::uint32_t n) {
    return std::vector<Complex>(1ULL << n, Complex{0.0, 0.0});
}

// Parses one amplitude entry: "1", "-0.5", "2i", "0.5+0.5i", "1-2i", "i".
Complex parse_complex(std::string text) {
    std::erase(text, ' ');
    require(!text.empty(), "empty amplitude entry");
    auto parse_real = [](const std::string &s) {
        if (s.empty() || s == "+") {
            return 1.0;
        }
        if (s == "-") {
            return -1.0;
        }
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument("bad number '" + s + "'");
        }
        return v;
    };
    if (text.back() == 'i' || text.back() == 'I' || text.back() == 'j') {
        // Split off a leading real part if one is present: find the sign that
        // separates the two terms (not a leading sign, not after an exponent).
        for (std::size_t k = text.size() - 1; k > 0; --k) {
            const char c = text[k];
            if ((c == '+' || c == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
                return {parse_real(text.substr(0, k)),
                        parse_real(text.substr(k, text.size() - 1 - k))};
            }
        }
        return {0.0, parse_real(text.substr(0, text.size() - 1))};
    }
    return {parse_real(text), 0.0};
}

std::vector<Complex> parse_amplitude_list(std::string body) {
    require(body.size() >= 2 && body.front() == '[' && body.back() == ']',
            "general amplitudes must be written as [a0,a1,...]");
    body = body.substr(1, body.size() - 2);
    std::vector<Complex> amps;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        amps.push_back(parse_complex(item));
    }
    require(!amps.empty(), "general amplitude list is empty");
    return amps;
}

std::uint32_t parse_n(const std::string &text) {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    require(used == text.size() && v >= 1, "bad qubit count '" + text + "'");
    return static_cast<std::uint32_t>(v);
}

double parse_angle(const std::string &text) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    require(used == text.size(), "bad angle '" + text + "'");
    return v;
}

BellVariant parse_bell_variant(const std::string &text) {
    if (text == "phi+") return BellVariant::PhiPlus;
    if (text == "phi-") return BellVariant::PhiMinus;
    if (text == "psi+") return BellVariant::PsiPlus;
    if (text == "psi-") return BellVariant::PsiMinus;
    throw std::invalid_argument("unknown Bell variant '" + text +
                                "' (expected phi+, phi-, psi+ or psi-)");
}

} // namespace

const char *to_string(StateFamily family) {
    switch (family) {
    case StateFamily::ProductBasis: return "basis";
    case StateFamily::Bell: return "bell";
    case StateFamily::Ghz: return "ghz";
    case StateFamily::W: return "w";
    case StateFamily::UnbalancedGhz: return "unbalanced_ghz";
    case StateFamily::UnbalancedW: return "unbalanced_w";
    case StateFamily::CorruptedGhz: return "corrupted_ghz";
    case StateFamily::CorruptedW: return "corrupted_w";
    case StateFamily::General: return "general";
    }
    return "?";
}

const char *to_string(BellVariant variant) {
    switch (variant) {
    case BellVariant::PhiPlus: return "phi+";
    case BellVariant::PhiMinus: return "phi-";
    case BellVariant::PsiPlus: return "psi+";
    case BellVariant::PsiMinus: return "psi-";
    }
    return "?";
}

std::uint32_t StateSpec::num_qubits() const {
    switch (family) {
    case StateFamily::Bell:
        return 2;
    case StateFamily::General: {
        std::uint64_t dim = amplitudes.size();
        std::uint32_t m = 0;
        while ((1ULL << m) < dim) {
            ++m;
        }
        return m;
    }
    default:
        return n;
    }
}

double ghz3_w3_mimic_delta() { return std::asin(std::sqrt(2.0 / 3.0)) - kPi / 4.0; }

StateVector build_bell(BellVariant variant) {
    auto amps = zeros(2);
    const double r = 1.0 / std::sqrt(2.0);
    switch (variant) {
    case BellVariant::PhiPlus:
        amps[0] = r;
        amps[3] = r;
        break;
    case BellVariant::PhiMinus:
        amps[0] = r;
        amps[3] = -r;
        break;
    case BellVariant::PsiPlus:
        amps[1] = r;
        amps[2] = r;
        break;
    case BellVariant::PsiMinus:
        amps[1] = r;
        amps[2] = -r;
        break;
    }
    return StateVector::from_amplitudes(2, std::move(amps));
}

StateVector build_ghz(std::uint32_t n) {
    require(n >= 2, "GHZ needs n >= 2");
    auto amps = zeros(n);
    const double r = 1.0 / std::sqrt(2.0);
    amps[0] = r;
    amps[(1ULL << n) - 1] = r;
    return StateVector::from_amplitudes(n, std::move(amps));
}

StateVector build_w(std::uint32_t n) {
    require(n >= 2, "W needs n >= 2");
    auto amps = zeros(n);
    const double r = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::uint32_t i = 0; i < n; ++i) {
        amps[1ULL << i] = r;
    }
    return StateVector::from_amplitudes(n, std::move(amps));
}

StateVector build_unbalanced_ghz(std::uint32_t n, double delta) {
    require(n >= 2, "unbalanced GHZ needs n >= 2");
    if (delta == 0.0) {
        return build_ghz(n); // bit-exact balanced limit
    }
    auto amps = zeros(n);
    amps[0] = std::sin(kPi / 4.0 + delta);
    amps[(1ULL << n) - 1] = std::cos(kPi / 4.0 + delta);
    return StateVector::from_amplitudes(n, std::move(amps));
}

StateVector build_unbalanced_w(std::uint32_t n, double delta) {
    require(n >= 2, "unbalanced W needs n >= 2");
    if (delta == 0.0) {
        return build_w(n);
    }
    auto amps = zeros(n);
    const double c = std::cos(delta);
    const double dn = static_cast<double>(n);
    amps[1] = c / std::sqrt(dn);
    const double rest = std::sqrt(1.0 / (dn - 1.0) - c * c / (dn * (dn - 1.0)));
    for (std::uint32_t j = 1; j < n; ++j) {
        amps[1ULL << j] = rest;
    }
    return StateVector::from_amplitudes(n, std::move(amps));
}

StateVector build_corrupted_ghz(std::uint32_t n, double phi, std::uint32_t extra_qubit) {
    require(n >= 2, "corrupted GHZ needs n >= 2");
    require(extra_qubit < n, "corrupted GHZ extra qubit out of range");
    if (phi == 0.0) {
        return build_ghz(n);
    }
    auto amps = zeros(n);
    const double t = std::cos(phi) / std::sqrt(2.0);
    amps[0] = t;
    amps[(1ULL << n) - 1] = t;
    amps[1ULL << extra_qubit] += std::sin(phi);
    return StateVector::from_amplitudes(n, std::move(amps));
}

StateVector build_corrupted_w(std::uint32_t n, double phi) {
    require(n >= 2, "corrupted W needs n >= 2");
    if (phi == 0.0) {
        return build_w(n);
    }
    auto amps = zeros(n);
    const double r = std::cos(phi) / std::sqrt(static_cast<double>(n));
    for (std::uint32_t i = 0; i < n; ++i) {
        amps[1ULL << i] = r;
    }
    amps[0] = std::sin(phi);
    return StateVector::from_amplitudes(n, std::move(amps));
}

StateVector build_general(std::vector<Complex> amplitudes) {
    std::uint64_t dim = amplitudes.size();
    require(dim >= 2 && (dim & (dim - 1)) == 0,
            "general state needs a power-of-two amplitude count (>= 2)");
    std::uint32_t m = 0;
    while ((1ULL << m) < dim) {
        ++m;
    }
    StateVector state = StateVector::from_amplitudes(m, std::move(amplitudes));
    const double norm = state.norm();
    if (norm < 1e-12) {
        throw std::invalid_argument("general state amplitudes are all zero");
    }
    if (std::abs(norm - 1.0) >= 1e-6) {
        std::cerr << "warning: general state norm " << norm << " != 1, normalizing\n";
    }
    state.normalize();
    return state;
}

StateVector build(const StateSpec &spec) {
    switch (spec.family) {
    case StateFamily::ProductBasis:
        require(spec.n >= 1, "basis state needs n >= 1");
        return StateVector::basis_state(spec.n, spec.label);
    case StateFamily::Bell:
        return build_bell(spec.variant);
    case StateFamily::Ghz:
        return build_ghz(spec.n);
    case StateFamily::W:
        return build_w(spec.n);
    case StateFamily::UnbalancedGhz:
        return build_unbalanced_ghz(spec.n, spec.delta);
    case StateFamily::UnbalancedW:
        return build_unbalanced_w(spec.n, spec.delta);
    case StateFamily::CorruptedGhz:
        return build_corrupted_ghz(spec.n, spec.phi, spec.extra_qubit);
    case StateFamily::CorruptedW:
        return build_corrupted_w(spec.n, spec.phi);
    case StateFamily::General:
        return build_general(spec.amplitudes);
    }
    throw std::invalid_argument("unknown state family");
}

StateSpec StateSpec::parse(const std::string &text) {
    const std::size_t head = text.find(':');
    const std::string family = text.substr(0, head);
    std::vector<std::string> args;
    if (head != std::string::npos) {
        if (family == "general") {
            args.push_back(text.substr(head + 1));
        } else {
            std::stringstream ss(text.substr(head + 1));
            std::string item;
            while (std::getline(ss, item, ':')) {
                args.push_back(item);
            }
        }
    }
    auto arg_count = [&](std::size_t want) {
        require(args.size() == want, "state spec '" + text + "' expects " +
                                         std::to_string(want) + " parameter(s)");
    };
    StateSpec spec;
    if (family == "basis" || family == "product") {
        spec.family = StateFamily::ProductBasis;
        arg_count(2);
        spec.n = parse_n(args[0]);
        spec.label = std::stoull(args[1]);
        require(spec.label < (1ULL << spec.n), "basis label out of range");
    } else if (family == "bell") {
        spec.family = StateFamily::Bell;
        arg_count(1);
        spec.variant = parse_bell_variant(args[0]);
        spec.n = 2;
    } else if (family == "ghz") {
        spec.family = StateFamily::Ghz;
        arg_count(1);
        spec.n = parse_n(args[0]);
    } else if (family == "w") {
        spec.family = StateFamily::W;
        arg_count(1);
        spec.n = parse_n(args[0]);
    } else if (family == "unbalanced_ghz") {
        spec.family = StateFamily::UnbalancedGhz;
        arg_count(2);
        spec.n = parse_n(args[0]);
        spec.delta = parse_angle(args[1]);
    } else if (family == "unbalanced_w") {
        spec.family = StateFamily::UnbalancedW;
        arg_count(2);
        spec.n = parse_n(args[0]);
        spec.delta = parse_angle(args[1]);
    } else if (family == "corrupted_ghz") {
        spec.family = StateFamily::CorruptedGhz;
        require(args.size() == 2 || args.size() == 3,
                "corrupted_ghz expects n:phi or n:phi:extra_qubit");
        spec.n = parse_n(args[0]);
        spec.phi = parse_angle(args[1]);
        if (args.size() == 3) {
            spec.extra_qubit = parse_n(args[2]);
        }
    } else if (family == "corrupted_w") {
        spec.family = StateFamily::CorruptedW;
        arg_count(2);
        spec.n = parse_n(args[0]);
        spec.phi = parse_angle(args[1]);
    } else if (family == "general") {
        spec.family = StateFamily::General;
        arg_count(1);
        spec.amplitudes = parse_amplitude_list(args[0]);
    } else if (family == "mimic_ghz3") {
        // Shorthand for the unbalanced GHZ_3 state that mimics W_3.
        spec.family = StateFamily::UnbalancedGhz;
        spec.n = 3;
        spec.delta = ghz3_w3_mimic_delta();
    } else {
        throw std::invalid_argument("unknown state family '" + family + "'");
    }
    return spec;
}

std::string StateSpec::describe() const {
    std::ostringstream out;
    out << to_string(family);
    switch (family) {
    case StateFamily::ProductBasis:
        out << ':' << n << ':' << label;
        break;
    case StateFamily::Bell:
        out << ':' << to_string(variant);
        break;
    case StateFamily::Ghz:
    case StateFamily::W:
        out << ':' << n;
        break;
    case StateFamily::UnbalancedGhz:
    case StateFamily::UnbalancedW:
        out << ':' << n << ':' << delta;
        break;
    case StateFamily::CorruptedGhz:
        out << ':' << n << ':' << phi;
        if (extra_qubit != 0) {
            out << ':' << extra_qubit;
        }
        break;
    case StateFamily::CorruptedW:
        out << ':' << n << ':' << phi;
        break;
    case StateFamily::General:
        out << ":[" << amplitudes.size() << " amplitudes]";
        break;
    }
    return out.str();
}

StateSpec StateSpec::from_json_text(const std::string &json_text) {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    StateSpec spec;
    const std::string family = j.at("family").get<std::string>();
    auto get_n = [&] { spec.n = j.at("n").get<std::uint32_t>(); };
    if (family == "basis" || family == "product_basis") {
        spec.family = StateFamily::ProductBasis;
        get_n();
        spec.label = j.at("label").get<std::uint64_t>();
    } else if (family == "bell") {
        spec.family = StateFamily::Bell;
        spec.variant = parse_bell_variant(j.at("variant").get<std::string>());
        spec.n = 2;
    } else if (family == "ghz") {
        spec.family = StateFamily::Ghz;
        get_n();
    } else if (family == "w") {
        spec.family = StateFamily::W;
        get_n();
    } else if (family == "unbalanced_ghz") {
        spec.family = StateFamily::UnbalancedGhz;
        get_n();
        spec.delta = j.at("delta").get<double>();
    } else if (family == "unbalanced_w") {
        spec.family = StateFamily::UnbalancedW;
        get_n();
        spec.delta = j.at("delta").get<double>();
    } else if (family == "corrupted_ghz") {
        spec.family = StateFamily::CorruptedGhz;
        get_n();
        spec.phi = j.at("phi").get<double>();
        if (j.contains("extra_qubit")) {
            spec.extra_qubit = j.at("extra_qubit").get<std::uint32_t>();
        }
    } else if (family == "corrupted_w") {
        spec.family = StateFamily::CorruptedW;
        get_n();
        spec.phi = j.at("phi").get<double>();
    } else if (family == "general") {
        spec.family = StateFamily::General;
        for (const auto &pair : j.at("amplitudes")) {
            require(pair.is_array() && pair.size() == 2,
                    "general amplitudes must be [re, im] pairs");
            spec.amplitudes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
    } else {
        throw std::invalid_argument("unknown state family '" + family + "'");
    }
    return spec;
}

std::string StateSpec::to_json_text() const {
    nlohmann::json j;
    j["family"] = to_string(family);
    switch (family) {
    case StateFamily::ProductBasis:
        j["n"] = n;
        j["label"] = label;
        break;
    case StateFamily::Bell:
        j["variant"] = to_string(variant);
        break;
    case StateFamily::Ghz:
    case StateFamily::W:
        j["n"] = n;
        break;
    case StateFamily::UnbalancedGhz:
    case StateFamily::UnbalancedW:
        j["n"] = n;
        j["delta"] = delta;
        break;
    case StateFamily::CorruptedGhz:
        j["n"] = n;
        j["phi"] = phi;
        if (extra_qubit != 0) {
            j["extra_qubit"] = extra_qubit;
        }
        break;
    case StateFamily::CorruptedW:
        j["n"] = n;
        j["phi"] = phi;
        break;
    case StateFamily::General: {
        nlohmann::json amps = nlohmann::json::array();
        for (const Complex &a : amplitudes) {
            amps.push_back({a.real(), a.imag()});
        }
        j["amplitudes"] = std::move(amps);
        break;
    }
    }
    return j.dump();
}

} // namespace cswap
