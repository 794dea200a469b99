// Copyright 2026 The lopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lopt/gates.h"

#include <cmath>
#include <numbers>
#include <string>

#include "lopt/reck.h"
#include "lopt/teleportation.h"

namespace lopt {

namespace {

constexpr double kPi = std::numbers::pi;

void check_mode(const FockState &s, int mode) {
    if (mode < 0 || static_cast<std::size_t>(mode) >= s.mode_count()) {
        throw std::out_of_range("mode " + std::to_string(mode) + " out of range");
    }
}

void require_coherent(const FockState &s, BosonicQubit q) {
    check_mode(s, q.a);
    check_mode(s, q.b);
    if (!is_coherent(s, q)) {
        throw IncoherentQubitError(
            "qubit on modes (" + std::to_string(q.a) + "," + std::to_string(q.b) + ") leaves the code space");
    }
}

FockState balanced(const FockState &s, int x, int y, double sign) {
    const int modes[2] = {x, y};
    return apply_on_modes(s, element_matrix(OpticalElement::beam_splitter(0, 1, sign * kBalancedAngle)), modes);
}

}  // namespace

FockState encode_qubit(Complex alpha0, Complex alpha1) {
    const Complex amps[2] = {alpha0, alpha1};
    return encode_qubits(amps);
}

FockState encode_qubits(std::span<const Complex> amplitudes) {
    std::size_t count = 0;
    while ((std::size_t{1} << count) < amplitudes.size()) {
        count++;
    }
    if ((std::size_t{1} << count) != amplitudes.size() || count == 0) {
        throw std::invalid_argument("qubit amplitudes must have length 2^k, k >= 1");
    }
    double norm = 0;
    for (auto a : amplitudes) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1) > 1e-10) {
        throw std::invalid_argument("qubit amplitudes are not normalized");
    }
    FockState out(2 * count);
    Occupation occ(2 * count);
    for (std::size_t idx = 0; idx < amplitudes.size(); idx++) {
        if (amplitudes[idx] == Complex(0)) {
            continue;
        }
        for (std::size_t q = 0; q < count; q++) {
            bool bit = (idx >> (count - 1 - q)) & 1;
            occ[2 * q] = bit ? 1 : 0;
            occ[2 * q + 1] = bit ? 0 : 1;
        }
        out.add(occ, amplitudes[idx]);
    }
    return out;
}

std::vector<Complex> qubit_amplitudes(const FockState &s, std::span<const BosonicQubit> qubits) {
    if (s.mode_count() != 2 * qubits.size()) {
        throw IncoherentQubitError("state has modes outside the listed qubits");
    }
    std::vector<Complex> out(std::size_t{1} << qubits.size(), 0.0);
    for (const auto &[occ, amp] : s.terms()) {
        std::size_t idx = 0;
        for (const auto &q : qubits) {
            int na = occ[q.a];
            int nb = occ[q.b];
            if (na + nb != 1) {
                if (std::abs(amp) > 1e-10) {
                    throw IncoherentQubitError("state leaves the code space on " + occupation_string(occ));
                }
            }
            idx = (idx << 1) | static_cast<std::size_t>(na);
        }
        out[idx] += amp;
    }
    return out;
}

double code_space_weight(const FockState &s, BosonicQubit q) {
    double w = 0;
    for (const auto &[occ, amp] : s.terms()) {
        if (occ[q.a] + occ[q.b] == 1) {
            w += std::norm(amp);
        }
    }
    double total = s.norm_squared();
    return total == 0 ? 0 : w / total;
}

bool is_coherent(const FockState &s, BosonicQubit q, double tol) {
    return std::abs(code_space_weight(s, q) - 1) <= tol;
}

FockState qubit_rotation(const FockState &s, BosonicQubit q, double theta) {
    return apply_element(s, OpticalElement::beam_splitter(q.a, q.b, theta));
}

ElementSequence hadamard_network(BosonicQubit q, int mode_count) {
    return {mode_count,
            {OpticalElement::phase_shifter(q.a, kPi), OpticalElement::beam_splitter(q.a, q.b, -kBalancedAngle)},
            1.0};
}

FockState hadamard(const FockState &s, BosonicQubit q) {
    return apply_sequence(s, hadamard_network(q, static_cast<int>(s.mode_count())));
}

ModeUnitary ns1_unitary() {
    const double r2 = std::sqrt(2.0);
    const double u12 = std::pow(2.0, -0.25);
    const double u13 = std::sqrt(3 / r2 - 2);
    const double u23 = 0.5 - 1 / r2;
    Eigen::MatrixXcd m(3, 3);
    m << 1 - r2, u12, u13,  //
        u12, 0.5, u23,      //
        u13, u23, r2 - 0.5;
    return ModeUnitary(m);
}

Ns1Network ns1_network() {
    return {decompose_reck(ns1_unitary()), {1, 0}, {1, 0}};
}

ProtocolBranches apply_ns1(const FockState &s, int mode, BranchPolicy &policy) {
    check_mode(s, mode);
    for (const auto &[occ, amp] : s.terms()) {
        if (occ[mode] > 2) {
            throw UnsupportedInputError("nonlinear sign gate supports at most 2 photons on mode " +
                                        std::to_string(mode));
        }
    }
    static const Ns1Network net = ns1_network();
    const int m = static_cast<int>(s.mode_count());
    const int ancilla[2] = {net.ancilla_input[0], net.ancilla_input[1]};
    const int targets[3] = {mode, m, m + 1};
    const int measured[2] = {m, m + 1};
    FockState w = apply_sequence(append_modes(s, ancilla), relabel(net.circuit, targets, m + 2));

    ProtocolBranches out;
    for (auto &o : policy.measure(w, measured)) {
        ProtocolResult r;
        r.success_probability = 0.25;
        r.probability = o.probability;
        r.output_state = o.post_state();
        r.note("element", "ns1 interferometer on mode " + std::to_string(mode));
        std::vector<int> counts = o.counts();
        r.detections = o.outcome;
        r.note("measure", "ns1 ancillas " + std::to_string(counts[0]) + std::to_string(counts[1]), o.probability);
        if (counts[0] != net.accept[0] || counts[1] != net.accept[1]) {
            r.fail({FailureKind::HeraldMismatch, "ns1", mode, -1});
        }
        out.push_back(std::move(r));
    }
    return out;
}

FockState ideal_mode_csign(const FockState &s, int x, int y) {
    check_mode(s, x);
    check_mode(s, y);
    FockState out(s.mode_count());
    for (const auto &[occ, amp] : s.terms()) {
        out.add(occ, (occ[x] * occ[y]) % 2 == 0 ? amp : -amp);
    }
    return out;
}

double mode_csign_probability(GadgetStrategy strategy) {
    switch (strategy.kind) {
        case GadgetStrategy::Kind::Ideal:
            return 1;
        case GadgetStrategy::Kind::NonlinearSign:
            return 1.0 / 16;
        case GadgetStrategy::Kind::Teleported: {
            double q = strategy.n / (strategy.n + 1.0);
            return q * q;
        }
    }
    return 0;
}

ProtocolBranches mode_csign(const FockState &s, int x, int y, GadgetStrategy strategy, BranchPolicy &policy) {
    check_mode(s, x);
    check_mode(s, y);
    if (x == y) {
        throw std::invalid_argument("c-sign needs two distinct modes");
    }
    const std::string where = std::to_string(x) + "," + std::to_string(y);
    switch (strategy.kind) {
        case GadgetStrategy::Kind::Ideal: {
            auto out = start(ideal_mode_csign(s, x, y), 1);
            out[0].note("element", "csign " + where);
            return out;
        }
        case GadgetStrategy::Kind::NonlinearSign: {
            auto out = start(balanced(s, x, y, 1), 1.0 / 16);
            out[0].note("element", "balanced splitter " + where);
            out = then(out, [&](const FockState &st) { return apply_ns1(st, x, policy); });
            out = then(out, [&](const FockState &st) { return apply_ns1(st, y, policy); });
            transform(out, [&](const FockState &st) { return balanced(st, x, y, -1); },
                      "inverse balanced splitter " + where);
            return out;
        }
        case GadgetStrategy::Kind::Teleported:
            return teleported_mode_csign(s, x, y, strategy.n, policy);
    }
    throw std::invalid_argument("unknown c-sign strategy");
}

ProtocolBranches csign_via_ns(const FockState &s, BosonicQubit q1, BosonicQubit q2, BranchPolicy &policy) {
    require_coherent(s, q1);
    require_coherent(s, q2);
    return mode_csign(s, q1.a, q2.a, GadgetStrategy::nonlinear_sign(), policy);
}

ProtocolBranches cnot(const FockState &s, BosonicQubit control, BosonicQubit target, GadgetStrategy strategy,
                      BranchPolicy &policy) {
    require_coherent(s, control);
    require_coherent(s, target);
    auto out = then(start(hadamard(s, target), mode_csign_probability(strategy)),
                    [&](const FockState &st) { return mode_csign(st, control.a, target.a, strategy, policy); });
    transform(out, [&](const FockState &st) { return hadamard(st, target); }, "hadamard on target");
    return out;
}

}  // namespace lopt
