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

#include "lopt/teleportation.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lopt/linear_optics.h"
#include "lopt/resource_states.h"

namespace lopt {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<int> range(int begin, int count) {
    std::vector<int> out(count);
    for (int i = 0; i < count; i++) {
        out[i] = begin + i;
    }
    return out;
}

std::string digits(std::span<const int> counts) {
    std::string out;
    for (int c : counts) {
        out += std::to_string(c);
        if (c > 9) {
            out += ' ';
        }
    }
    return out;
}

double wrap(double angle) {
    angle = std::fmod(angle, 2 * kPi);
    return angle < 0 ? angle + 2 * kPi : angle;
}

void correct(ProtocolResult &r, int mode, double angle) {
    angle = wrap(angle);
    if (angle == 0) {
        return;
    }
    r.output_state = apply_phase(r.output_state, mode, angle);
    r.corrections.push_back({mode, angle});
    r.note("correction", "phase " + std::to_string(angle) + " on mode " + std::to_string(mode));
}

/// Drops every resource mode (index >= first) that holds a definite count.
FockState release(const FockState &s, int first, Occupation *leftover) {
    std::vector<int> definite;
    for (int m = first; m < static_cast<int>(s.mode_count()); m++) {
        const int one[1] = {m};
        if (modes_are_definite(s, one)) {
            definite.push_back(m);
        }
    }
    return drop_definite_modes(s, definite, leftover);
}

struct FourierStep {
    FockState state;  // measured modes back in place as vacuum
    double probability = 0;
    int k = 0;
    std::vector<int> pattern;
    std::vector<std::pair<int, int>> detections;
};

/// Fourier transform on {x} + `first`, then counts on those n + 1 ports.
std::vector<FourierStep> fourier_step(const FockState &s, int x, std::span<const int> first, BranchPolicy &policy) {
    const int n = static_cast<int>(first.size());
    std::vector<int> ports{x};
    ports.insert(ports.end(), first.begin(), first.end());
    FockState w = apply_on_modes(s, fourier_matrix(n), ports);
    std::vector<int> sorted = ports;
    std::sort(sorted.begin(), sorted.end());
    std::vector<FourierStep> out;
    for (auto &o : policy.measure(w, ports)) {
        FourierStep step;
        step.state = insert_vacuum_modes(o.post_state(), sorted);
        step.probability = o.probability;
        step.pattern = o.counts();
        for (int c : step.pattern) {
            step.k += c;
        }
        step.detections = o.outcome;
        out.push_back(std::move(step));
    }
    return out;
}

std::string port_list(int x, std::span<const int> first) {
    std::string out = std::to_string(x);
    for (int m : first) {
        out += "," + std::to_string(m);
    }
    return out;
}

}  // namespace

std::vector<Bm1Outcome> bm1_measure(const FockState &s, int m1, int m2, BranchPolicy &policy) {
    const int modes[2] = {m1, m2};
    FockState w =
        apply_on_modes(s, element_matrix(OpticalElement::beam_splitter(0, 1, kBalancedAngle)), modes);
    std::vector<Bm1Outcome> out;
    for (auto &o : policy.measure(w, modes)) {
        Bm1Outcome b;
        b.counts = o.counts();
        int total = b.counts[0] + b.counts[1];
        b.parity = total % 2;
        if (total == 1) {
            b.sign = b.counts[1] == 1 ? 1 : -1;
        }
        b.probability = o.probability;
        b.post_state = o.post_state();
        out.push_back(std::move(b));
    }
    return out;
}

ProtocolBranches teleport_bm1(const FockState &host, int input_mode, BranchPolicy &policy) {
    const int m = static_cast<int>(host.mode_count());
    if (input_mode < 0 || input_mode >= m) {
        throw std::out_of_range("teleport input mode out of range");
    }
    FockState w = tensor(host, make_resource(ResourceKind::tn(1)).state);
    const int target = m + 1;
    std::vector<int> measured{input_mode, m};
    ProtocolBranches out;
    for (auto &b : bm1_measure(w, input_mode, m, policy)) {
        ProtocolResult r;
        r.success_probability = 0.5;
        r.probability = b.probability;
        r.detections = {{input_mode, b.counts[0]}, {m, b.counts[1]}};
        r.note("element", "balanced splitter " + std::to_string(input_mode) + "," + std::to_string(m));
        r.note("measure", "bell pattern " + digits(b.counts), b.probability);
        r.output_state = insert_vacuum_modes(b.post_state, measured);
        if (b.parity == 1) {
            r.output_state = swap_modes(r.output_state, input_mode, target);
            if (b.sign < 0) {
                correct(r, input_mode, kPi);
            }
        } else {
            r.fail({FailureKind::BasisProjection, "bm1", input_mode, b.counts[0] + b.counts[1] == 0 ? 0 : 1});
        }
        r.output_state = release(r.output_state, m, &r.leftover);
        out.push_back(std::move(r));
    }
    return out;
}

double fourier_correction_angle(std::span<const int> pattern) {
    const int points = static_cast<int>(pattern.size());
    long long s = 0;
    for (int j = 0; j < points; j++) {
        s += static_cast<long long>(j) * pattern[j];
    }
    return wrap(2 * kPi * static_cast<double>(s % points) / points);
}

ProtocolBranches teleport_tn(const FockState &host, int input_mode, int n, BranchPolicy &policy) {
    const int m = static_cast<int>(host.mode_count());
    if (input_mode < 0 || input_mode >= m) {
        throw std::out_of_range("teleport input mode out of range");
    }
    FockState w = tensor(host, make_resource(ResourceKind::tn(n)).state);
    const auto first = range(m, n);
    ProtocolBranches out;
    for (auto &step : fourier_step(w, input_mode, first, policy)) {
        ProtocolResult r;
        r.success_probability = n / (n + 1.0);
        r.probability = step.probability;
        r.detections = step.detections;
        r.output_state = std::move(step.state);
        r.note("element", "fourier " + std::to_string(n + 1) + " on modes " + port_list(input_mode, first));
        r.note("measure", "fourier pattern " + digits(step.pattern), step.probability);
        if (step.k >= 1 && step.k <= n) {
            r.output_state = swap_modes(r.output_state, input_mode, m + n + step.k - 1);
            correct(r, input_mode, fourier_correction_angle(step.pattern));
        } else {
            r.fail({FailureKind::BasisProjection, "bm" + std::to_string(n), input_mode, step.k == 0 ? 0 : 1});
        }
        r.output_state = release(r.output_state, m, &r.leftover);
        out.push_back(std::move(r));
    }
    return out;
}

ProtocolBranches teleport_mode_pair(const FockState &host, int x, int y, int n, PairResource kind,
                                    const FockState &resource, BranchPolicy &policy) {
    const int m = static_cast<int>(host.mode_count());
    if (x < 0 || x >= m || y < 0 || y >= m || x == y) {
        throw std::out_of_range("teleported pair needs two distinct host modes");
    }
    if (resource.mode_count() != static_cast<std::size_t>(4 * n)) {
        throw ModeMismatchError("pair resource must have 4n modes");
    }
    const double step_p = n / (n + 1.0);
    FockState w = tensor(host, resource);
    const auto first_a = range(m, n);
    const auto first_b = range(m + 2 * n, n);
    const std::string tag = kind == PairResource::SignedCsign ? "csign" : "parity";

    ProtocolBranches out;
    for (auto &s1 : fourier_step(w, x, first_a, policy)) {
        ProtocolResult r;
        r.success_probability = step_p * step_p;
        r.probability = s1.probability;
        r.detections = s1.detections;
        r.output_state = std::move(s1.state);
        r.note("element", "fourier " + std::to_string(n + 1) + " on modes " + port_list(x, first_a));
        r.note("measure", "first pattern " + digits(s1.pattern), s1.probability);
        if (s1.k < 1 || s1.k > n) {
            r.fail({FailureKind::BasisProjection, tag + " first", x, s1.k == 0 ? 0 : 1});
            r.output_state = release(r.output_state, m, &r.leftover);
            out.push_back(std::move(r));
            continue;
        }
        r.output_state = swap_modes(r.output_state, x, m + n + s1.k - 1);
        const double angle_x = fourier_correction_angle(s1.pattern);

        for (auto &s2 : fourier_step(r.output_state, y, first_b, policy)) {
            ProtocolResult b = r;
            b.probability = r.probability * s2.probability;
            b.detections.insert(b.detections.end(), s2.detections.begin(), s2.detections.end());
            b.output_state = std::move(s2.state);
            b.note("element", "fourier " + std::to_string(n + 1) + " on modes " + port_list(y, first_b));
            b.note("measure", "second pattern " + digits(s2.pattern), s2.probability);
            if (s2.k >= 1 && s2.k <= n) {
                b.output_state = swap_modes(b.output_state, y, m + 3 * n + s2.k - 1);
                double angle_y = fourier_correction_angle(s2.pattern);
                double ax = angle_x;
                if (kind == PairResource::SignedCsign) {
                    ax += (n - s2.k) % 2 != 0 ? kPi : 0;
                    angle_y += (n - s1.k) % 2 != 0 ? kPi : 0;
                } else {
                    b.parity = (s1.k + s2.k + (kind == PairResource::ParityOdd ? 1 : 0)) % 2;
                    b.note("measure", std::string("parity ") + (*b.parity == 0 ? "even" : "odd"));
                }
                correct(b, x, ax);
                correct(b, y, angle_y);
            } else {
                b.fail({FailureKind::BasisProjection, tag + " second", y, s2.k == 0 ? 0 : 1});
                double ax = angle_x;
                const int i = s2.k == 0 ? 0 : n;
                if (kind == PairResource::SignedCsign && (n - i) % 2 != 0) {
                    ax += kPi;
                }
                correct(b, x, ax);
            }
            b.output_state = release(b.output_state, m, &b.leftover);
            out.push_back(std::move(b));
        }
    }
    return out;
}

ProtocolBranches teleported_mode_csign(const FockState &host, int x, int y, int n, BranchPolicy &policy,
                                       const FockState *resource) {
    if (resource != nullptr) {
        return teleport_mode_pair(host, x, y, n, PairResource::SignedCsign, *resource, policy);
    }
    static thread_local std::vector<FockState> cache;
    if (cache.size() <= static_cast<std::size_t>(n)) {
        cache.resize(n + 1);
    }
    if (cache[n].mode_count() == 0) {
        cache[n] = make_resource(ResourceKind::tn_prime(n)).state;
    }
    return teleport_mode_pair(host, x, y, n, PairResource::SignedCsign, cache[n], policy);
}

ProtocolBranches csign_teleported(const FockState &host, BosonicQubit q1, BosonicQubit q2, int n,
                                  BranchPolicy &policy, const FockState *resource) {
    if (!is_coherent(host, q1) || !is_coherent(host, q2)) {
        throw IncoherentQubitError("teleported c-sign needs coherent qubits");
    }
    return teleported_mode_csign(host, q1.a, q2.a, n, policy, resource);
}

}  // namespace lopt
