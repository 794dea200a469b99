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

#include "lopt/linear_optics.h"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace lopt {

namespace {

// e^{2 pi i num / den}, exact on quarter turns so that small Fourier matrices
// have clean real/imaginary zeros.
Complex unit_root(long long num, long long den) {
    num %= den;
    if (num < 0) {
        num += den;
    }
    if ((4 * num) % den == 0) {
        switch ((4 * num) / den) {
            case 0:
                return {1, 0};
            case 1:
                return {0, 1};
            case 2:
                return {-1, 0};
            default:
                return {0, -1};
        }
    }
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den));
}

// sqrt(k!) exactly representable up to where k! still fits a double.
double sqrt_factorial(int k) {
    static const auto table = [] {
        std::array<double, 171> t{};
        double f = 1;
        t[0] = 1;
        for (int i = 1; i < 171; ++i) {
            f *= i;
            t[i] = std::sqrt(f);
        }
        return t;
    }();
    if (k < 171) {
        return table[k];
    }
    return std::exp(0.5 * std::lgamma(k + 1.0));
}

void check_modes(const OpticalElement &e, int mode_count) {
    auto bad = [&](int md) { return md < 0 || md >= mode_count; };
    if (bad(e.mode) || (e.kind == OpticalElement::Kind::BeamSplitter && bad(e.mode2))) {
        throw std::out_of_range("element mode index out of range for " + std::to_string(mode_count) + " modes");
    }
}

using Expansion = std::vector<std::pair<Occupation, Complex>>;

// Fock expansion of one sub-occupation under u.
Expansion expand_monomial(const Eigen::MatrixXcd &u, const Occupation &in) {
    const int k = static_cast<int>(u.rows());
    std::map<Occupation, Complex> poly{{Occupation(k, 0), Complex(1.0)}};
    for (int l = 0; l < k; ++l) {
        for (int rep = 0; rep < in[l]; ++rep) {
            std::map<Occupation, Complex> next;
            for (const auto &[exps, coeff] : poly) {
                for (int m = 0; m < k; ++m) {
                    Complex w = u(m, l);
                    if (w == Complex(0.0)) {
                        continue;
                    }
                    Occupation e = exps;
                    ++e[m];
                    next[e] += coeff * w;
                }
            }
            poly = std::move(next);
        }
    }
    double in_norm = 1;
    for (auto c : in) {
        in_norm *= sqrt_factorial(c);
    }
    Expansion out;
    out.reserve(poly.size());
    for (const auto &[exps, coeff] : poly) {
        double out_norm = 1;
        for (auto c : exps) {
            out_norm *= sqrt_factorial(c);
        }
        out.emplace_back(exps, coeff * (out_norm / in_norm));
    }
    return out;
}

}  // namespace

double unitarity_residual(const Eigen::MatrixXcd &u) {
    if (u.rows() != u.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

ModeUnitary::ModeUnitary(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
        throw NonUnitaryError("mode unitary must be a non-empty square matrix", std::numeric_limits<double>::infinity());
    }
    double r = unitarity_residual(matrix_);
    if (!(r <= kUnitarityTolerance)) {
        throw NonUnitaryError("matrix is not unitary (residual " + std::to_string(r) + ")", r);
    }
}

ModeUnitary ModeUnitary::identity(int dimension) {
    return ModeUnitary(Eigen::MatrixXcd::Identity(dimension, dimension));
}

ModeUnitary ModeUnitary::adjoint() const {
    return ModeUnitary(matrix_.adjoint());
}

ModeUnitary operator*(const ModeUnitary &a, const ModeUnitary &b) {
    if (a.dimension() != b.dimension()) {
        throw ModeMismatchError("multiplying mode unitaries of different dimension");
    }
    return ModeUnitary(a.matrix() * b.matrix());
}

OpticalElement OpticalElement::phase_shifter(int mode, double theta) {
    return {Kind::PhaseShifter, mode, -1, theta};
}

OpticalElement OpticalElement::beam_splitter(int mode, int other, double theta) {
    if (mode == other) {
        throw std::invalid_argument("beam splitter needs two distinct modes");
    }
    return {Kind::BeamSplitter, mode, other, theta};
}

ModeUnitary element_matrix(const OpticalElement &e) {
    if (e.kind == OpticalElement::Kind::PhaseShifter) {
        Eigen::MatrixXcd m(1, 1);
        m(0, 0) = std::polar(1.0, e.theta);
        return ModeUnitary(m);
    }
    Eigen::MatrixXcd m(2, 2);
    double c = std::cos(e.theta);
    double s = std::sin(e.theta);
    m << c, -s, s, c;
    return ModeUnitary(m);
}

ModeUnitary fourier_matrix(int n) {
    if (n < 1) {
        throw std::invalid_argument("Fourier transform needs n >= 1");
    }
    const int d = n + 1;
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    Eigen::MatrixXcd m(d, d);
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            m(k, l) = unit_root(static_cast<long long>(k) * l, d) * scale;
        }
    }
    return ModeUnitary(m);
}

ModeUnitary embed(const OpticalElement &e, int mode_count) {
    check_modes(e, mode_count);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(mode_count, mode_count);
    const ModeUnitary element = element_matrix(e);
    const auto &local = element.matrix();
    if (e.kind == OpticalElement::Kind::PhaseShifter) {
        m(e.mode, e.mode) = local(0, 0);
    } else {
        m(e.mode, e.mode) = local(0, 0);
        m(e.mode, e.mode2) = local(0, 1);
        m(e.mode2, e.mode) = local(1, 0);
        m(e.mode2, e.mode2) = local(1, 1);
    }
    return ModeUnitary(m);
}

ModeUnitary compose(const ElementSequence &seq) {
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(seq.mode_count, seq.mode_count);
    for (const auto &e : seq.elements) {
        total = embed(e, seq.mode_count).matrix() * total;
    }
    return ModeUnitary(seq.global_phase * total);
}

FockState apply_on_modes(const FockState &s, const ModeUnitary &u, std::span<const int> modes) {
    const int k = u.dimension();
    if (static_cast<int>(modes.size()) != k) {
        throw ModeMismatchError(
            std::to_string(k) + "-mode unitary applied to " + std::to_string(modes.size()) + " modes");
    }
    std::vector<bool> used(s.mode_count(), false);
    for (int md : modes) {
        if (md < 0 || static_cast<std::size_t>(md) >= s.mode_count() || used[md]) {
            throw std::out_of_range("bad target mode " + std::to_string(md));
        }
        used[md] = true;
    }

    std::map<Occupation, Expansion> cache;
    FockState out(s.mode_count());
    Occupation sub(k);
    for (const auto &[occ, amp] : s.terms()) {
        for (int i = 0; i < k; ++i) {
            sub[i] = occ[modes[i]];
        }
        auto it = cache.find(sub);
        if (it == cache.end()) {
            it = cache.emplace(sub, expand_monomial(u.matrix(), sub)).first;
        }
        Occupation target = occ;
        for (const auto &[sub_out, coeff] : it->second) {
            for (int i = 0; i < k; ++i) {
                target[modes[i]] = sub_out[i];
            }
            out.add(target, amp * coeff);
        }
    }
    return out.pruned(kPruneTolerance * std::max(1.0, s.norm()));
}

FockState apply_mode_unitary(const FockState &s, const ModeUnitary &u) {
    if (static_cast<std::size_t>(u.dimension()) != s.mode_count()) {
        throw ModeMismatchError(
            std::to_string(u.dimension()) + "-mode unitary applied to a " + std::to_string(s.mode_count()) +
            "-mode state");
    }
    std::vector<int> all(s.mode_count());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = static_cast<int>(i);
    }
    return apply_on_modes(s, u, all);
}

FockState apply_element(const FockState &s, const OpticalElement &e) {
    check_modes(e, static_cast<int>(s.mode_count()));
    if (e.kind == OpticalElement::Kind::PhaseShifter) {
        return apply_phase(s, e.mode, e.theta);
    }
    const int modes[2] = {e.mode, e.mode2};
    return apply_on_modes(s, element_matrix(e), modes);
}

ElementSequence relabel(const ElementSequence &seq, std::span<const int> modes, int mode_count) {
    if (modes.size() != static_cast<std::size_t>(seq.mode_count)) {
        throw ModeMismatchError("relabel needs one target mode per sequence mode");
    }
    for (int m : modes) {
        if (m < 0 || m >= mode_count) {
            throw std::out_of_range("relabel target mode out of range");
        }
    }
    ElementSequence out{mode_count, {}, seq.global_phase};
    for (auto e : seq.elements) {
        e.mode = modes[e.mode];
        if (e.kind == OpticalElement::Kind::BeamSplitter) {
            e.mode2 = modes[e.mode2];
        }
        out.elements.push_back(e);
    }
    return out;
}

FockState apply_sequence(const FockState &s, const ElementSequence &seq) {
    if (static_cast<std::size_t>(seq.mode_count) != s.mode_count()) {
        throw ModeMismatchError("element sequence and state disagree on mode count");
    }
    FockState out = s;
    for (const auto &e : seq.elements) {
        out = apply_element(out, e);
    }
    return seq.global_phase == Complex(1.0) ? out : out.scaled(seq.global_phase);
}

}  // namespace lopt
