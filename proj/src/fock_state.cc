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

#include "lopt/fock_state.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace lopt {

Occupation make_occupation(std::span<const int> counts) {
    Occupation occ;
    occ.reserve(counts.size());
    for (int c : counts) {
        if (c < 0) {
            throw InvalidOccupationError("negative photon count " + std::to_string(c));
        }
        if (c > kMaxPhotonsPerMode) {
            throw InvalidOccupationError("photon count " + std::to_string(c) + " exceeds per-mode limit");
        }
        occ.push_back(static_cast<std::uint8_t>(c));
    }
    return occ;
}

Occupation make_occupation(std::initializer_list<int> counts) {
    return make_occupation(std::span<const int>(counts.begin(), counts.size()));
}

int total_photons(const Occupation &occ) {
    int total = 0;
    for (auto c : occ) {
        total += c;
    }
    return total;
}

FockState::FockState(std::size_t mode_count) : mode_count_(mode_count) {
}

FockState FockState::vacuum(std::size_t mode_count) {
    FockState s(mode_count);
    s.terms_.emplace(Occupation(mode_count, 0), Complex(1.0));
    return s;
}

FockState FockState::number_state(std::span<const int> counts) {
    FockState s(counts.size());
    s.terms_.emplace(make_occupation(counts), Complex(1.0));
    return s;
}

FockState FockState::number_state(std::initializer_list<int> counts) {
    return number_state(std::span<const int>(counts.begin(), counts.size()));
}

FockState FockState::superposition(
    std::size_t mode_count, std::initializer_list<std::pair<std::vector<int>, Complex>> terms) {
    FockState s(mode_count);
    for (const auto &[counts, amp] : terms) {
        s.add(counts, amp);
    }
    return s;
}

void FockState::add(const Occupation &occ, Complex amplitude) {
    if (occ.size() != mode_count_) {
        throw ModeMismatchError(
            "occupation of length " + std::to_string(occ.size()) + " added to a " + std::to_string(mode_count_) +
            "-mode state");
    }
    if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag())) {
        throw std::domain_error("non-finite amplitude for " + occupation_string(occ));
    }
    auto [it, inserted] = terms_.try_emplace(occ, amplitude);
    if (!inserted) {
        it->second += amplitude;
    }
}

void FockState::add(std::span<const int> counts, Complex amplitude) {
    add(make_occupation(counts), amplitude);
}

Complex FockState::amplitude(const Occupation &occ) const {
    auto it = terms_.find(occ);
    return it == terms_.end() ? Complex(0.0) : it->second;
}

Complex FockState::amplitude(std::initializer_list<int> counts) const {
    return amplitude(make_occupation(counts));
}

double FockState::norm_squared() const {
    double total = 0;
    for (const auto &[occ, amp] : terms_) {
        total += std::norm(amp);
    }
    return total;
}

double FockState::norm() const {
    return std::sqrt(norm_squared());
}

FockState FockState::pruned(double tol) const {
    FockState out(mode_count_);
    for (const auto &[occ, amp] : terms_) {
        if (std::abs(amp) > tol) {
            out.terms_.emplace_hint(out.terms_.end(), occ, amp);
        }
    }
    return out;
}

FockState FockState::canonicalize(double tol, bool renormalize) const {
    if (tol < 0) {
        throw std::invalid_argument("negative prune tolerance");
    }
    FockState out = pruned(tol);
    if (out.empty()) {
        throw ZeroStateError("all amplitudes pruned");
    }
    if (renormalize) {
        double n = out.norm();
        for (auto &[occ, amp] : out.terms_) {
            amp /= n;
        }
    }
    return out;
}

FockState FockState::normalized() const {
    double n = norm();
    if (n == 0) {
        throw ZeroStateError("cannot normalize the zero vector");
    }
    return scaled(Complex(1.0 / n));
}

FockState FockState::scaled(Complex factor) const {
    FockState out(*this);
    for (auto &[occ, amp] : out.terms_) {
        amp *= factor;
    }
    return out;
}

FockState tensor(const FockState &a, const FockState &b) {
    FockState out(a.mode_count() + b.mode_count());
    Occupation joined(a.mode_count() + b.mode_count());
    for (const auto &[oa, va] : a.terms()) {
        std::copy(oa.begin(), oa.end(), joined.begin());
        for (const auto &[ob, vb] : b.terms()) {
            std::copy(ob.begin(), ob.end(), joined.begin() + oa.size());
            out.add(joined, va * vb);
        }
    }
    return out;
}

FockState operator+(const FockState &a, const FockState &b) {
    if (a.mode_count() != b.mode_count()) {
        throw ModeMismatchError("adding states with different mode counts");
    }
    FockState out(a);
    for (const auto &[occ, amp] : b.terms()) {
        out.add(occ, amp);
    }
    return out;
}

Complex inner_product(const FockState &a, const FockState &b) {
    if (a.mode_count() != b.mode_count()) {
        throw ModeMismatchError(
            "inner product of " + std::to_string(a.mode_count()) + "-mode and " + std::to_string(b.mode_count()) +
            "-mode states");
    }
    const auto &small = a.size() <= b.size() ? a : b;
    const auto &large = a.size() <= b.size() ? b : a;
    Complex total = 0;
    for (const auto &[occ, amp] : small.terms()) {
        auto it = large.terms().find(occ);
        if (it != large.terms().end()) {
            total += &small == &a ? std::conj(amp) * it->second : std::conj(it->second) * amp;
        }
    }
    return total;
}

double fidelity(const FockState &a, const FockState &b) {
    double na = a.norm_squared();
    double nb = b.norm_squared();
    if (na == 0 || nb == 0) {
        return 0;
    }
    return std::norm(inner_product(a, b)) / (na * nb);
}

bool approx_equal(const FockState &a, const FockState &b, double tol) {
    if (a.mode_count() != b.mode_count()) {
        return false;
    }
    for (const auto &[occ, amp] : a.terms()) {
        if (std::abs(amp - b.amplitude(occ)) > tol) {
            return false;
        }
    }
    for (const auto &[occ, amp] : b.terms()) {
        if (!a.terms().contains(occ) && std::abs(amp) > tol) {
            return false;
        }
    }
    return true;
}

FockState permute_modes(const FockState &s, std::span<const int> order) {
    const auto m = s.mode_count();
    if (order.size() != m) {
        throw ModeMismatchError("permutation length differs from mode count");
    }
    std::vector<bool> seen(m, false);
    for (int o : order) {
        if (o < 0 || static_cast<std::size_t>(o) >= m || seen[o]) {
            throw std::invalid_argument("mode order is not a permutation");
        }
        seen[o] = true;
    }
    FockState out(m);
    Occupation moved(m);
    for (const auto &[occ, amp] : s.terms()) {
        for (std::size_t i = 0; i < m; ++i) {
            moved[i] = occ[order[i]];
        }
        out.add(moved, amp);
    }
    return out;
}

FockState swap_modes(const FockState &s, int a, int b) {
    std::vector<int> order(s.mode_count());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = static_cast<int>(i);
    }
    std::swap(order.at(a), order.at(b));
    return permute_modes(s, order);
}

FockState apply_phase(const FockState &s, int mode, double angle) {
    if (mode < 0 || static_cast<std::size_t>(mode) >= s.mode_count()) {
        throw std::out_of_range("phase shifter mode " + std::to_string(mode) + " out of range");
    }
    FockState out(s.mode_count());
    for (const auto &[occ, amp] : s.terms()) {
        out.add(occ, amp * std::polar(1.0, angle * occ[mode]));
    }
    return out;
}

FockState append_modes(const FockState &s, std::span<const int> counts) {
    return tensor(s, FockState::number_state(counts));
}

FockState insert_vacuum_modes(const FockState &s, std::vector<int> positions) {
    std::sort(positions.begin(), positions.end());
    const std::size_t m = s.mode_count() + positions.size();
    std::vector<bool> vacant(m, false);
    for (int p : positions) {
        if (p < 0 || static_cast<std::size_t>(p) >= m || vacant[p]) {
            throw std::invalid_argument("bad vacuum insertion position");
        }
        vacant[p] = true;
    }
    FockState out(m);
    Occupation grown(m);
    for (const auto &[occ, amp] : s.terms()) {
        std::size_t src = 0;
        for (std::size_t i = 0; i < m; ++i) {
            grown[i] = vacant[i] ? 0 : occ[src++];
        }
        out.add(grown, amp);
    }
    return out;
}

namespace {

std::vector<bool> mode_mask(std::size_t m, std::span<const int> modes) {
    std::vector<bool> mask(m, false);
    for (int md : modes) {
        if (md < 0 || static_cast<std::size_t>(md) >= m) {
            throw std::out_of_range("mode " + std::to_string(md) + " out of range");
        }
        if (mask[md]) {
            throw std::invalid_argument("duplicate mode " + std::to_string(md));
        }
        mask[md] = true;
    }
    return mask;
}

Occupation pick(const Occupation &occ, std::span<const int> modes) {
    Occupation sub(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i) {
        sub[i] = occ[modes[i]];
    }
    return sub;
}

}  // namespace

bool modes_are_definite(const FockState &s, std::span<const int> modes) {
    mode_mask(s.mode_count(), modes);
    if (s.empty()) {
        return true;
    }
    const Occupation first = pick(s.terms().begin()->first, modes);
    for (const auto &[occ, amp] : s.terms()) {
        if (pick(occ, modes) != first) {
            return false;
        }
    }
    return true;
}

FockState drop_definite_modes(const FockState &s, std::span<const int> modes, Occupation *pattern) {
    auto mask = mode_mask(s.mode_count(), modes);
    if (!modes_are_definite(s, modes)) {
        throw std::invalid_argument("modes to drop are not in a definite number state");
    }
    if (pattern != nullptr) {
        *pattern = s.empty() ? Occupation(modes.size(), 0) : pick(s.terms().begin()->first, modes);
    }
    FockState out(s.mode_count() - modes.size());
    Occupation kept;
    for (const auto &[occ, amp] : s.terms()) {
        kept.clear();
        for (std::size_t i = 0; i < occ.size(); ++i) {
            if (!mask[i]) {
                kept.push_back(occ[i]);
            }
        }
        out.add(kept, amp);
    }
    return out;
}

ReducedState reduced_density_matrix(const FockState &s, std::span<const int> modes) {
    auto mask = mode_mask(s.mode_count(), modes);
    // Group amplitudes by the occupation of the traced-out environment.
    std::map<Occupation, std::vector<std::pair<Occupation, Complex>>> by_env;
    std::set<Occupation> basis_set;
    for (const auto &[occ, amp] : s.terms()) {
        Occupation env;
        for (std::size_t i = 0; i < occ.size(); ++i) {
            if (!mask[i]) {
                env.push_back(occ[i]);
            }
        }
        Occupation sys = pick(occ, modes);
        basis_set.insert(sys);
        by_env[env].emplace_back(std::move(sys), amp);
    }
    ReducedState out;
    out.basis.assign(basis_set.begin(), basis_set.end());
    std::map<Occupation, int> index;
    for (std::size_t i = 0; i < out.basis.size(); ++i) {
        index[out.basis[i]] = static_cast<int>(i);
    }
    const auto d = static_cast<Eigen::Index>(out.basis.size());
    out.rho = Eigen::MatrixXcd::Zero(d, d);
    for (const auto &[env, column] : by_env) {
        for (const auto &[ri, ai] : column) {
            for (const auto &[rj, aj] : column) {
                out.rho(index[ri], index[rj]) += ai * std::conj(aj);
            }
        }
    }
    double trace = out.rho.trace().real();
    if (trace > 0) {
        out.rho /= trace;
    }
    return out;
}

double entanglement_entropy_bits(const FockState &s, std::span<const int> modes) {
    auto reduced = reduced_density_matrix(s, modes);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(reduced.rho, Eigen::EigenvaluesOnly);
    double entropy = 0;
    for (double p : solver.eigenvalues()) {
        if (p > 1e-15) {
            entropy -= p * std::log2(p);
        }
    }
    return entropy;
}

std::string occupation_string(const Occupation &occ) {
    std::string out = "|";
    for (std::size_t i = 0; i < occ.size(); ++i) {
        if (i > 0 && (occ[i] > 9 || occ[i - 1] > 9)) {
            out += ',';
        }
        out += std::to_string(occ[i]);
    }
    return out + ">";
}

std::string to_string(const FockState &s) {
    if (s.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &[occ, amp] : s.terms()) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << amp.real() << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag()) << "i)"
            << occupation_string(occ);
    }
    return out.str();
}

}  // namespace lopt
