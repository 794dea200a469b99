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

#include "lopt/photon_source.h"

#include <Eigen/Dense>
#include <cmath>
#include <string>

namespace lopt {

double truncation_tail(double r, int cutoff) {
    return std::pow(std::tanh(r), 2.0 * (cutoff + 1));
}

int required_cutoff(double r, double tail) {
    if (r < 0 || !std::isfinite(r)) {
        throw std::invalid_argument("squeezing strength must be finite and non-negative");
    }
    int cutoff = 1;
    while (truncation_tail(r, cutoff) > tail) {
        cutoff++;
        if (cutoff > kMaxPhotonsPerMode) {
            throw InsufficientCutoffError("squeezing too strong for the photon-number limit");
        }
    }
    return cutoff;
}

SqueezeParam squeeze(double r) {
    return {r, required_cutoff(r)};
}

FockState two_mode_squeezed_vacuum(SqueezeParam p) {
    if (p.r < 0 || !std::isfinite(p.r)) {
        throw std::invalid_argument("squeezing strength must be finite and non-negative");
    }
    if (p.cutoff < 1 || p.cutoff > kMaxPhotonsPerMode) {
        throw std::invalid_argument("cutoff out of range");
    }
    const double tail = truncation_tail(p.r, p.cutoff);
    if (tail > kSqueezeTail) {
        throw InsufficientCutoffError("cutoff " + std::to_string(p.cutoff) + " leaves tail weight " +
                                      std::to_string(tail) + " for r = " + std::to_string(p.r));
    }
    const double t = std::tanh(p.r);
    const double c0 = 1 / std::cosh(p.r);
    FockState s(2);
    double c = c0;
    for (int n = 0; n <= p.cutoff; n++) {
        if (c > 0) {
            s.add(make_occupation({n, n}), c);
        }
        c *= t;
    }
    return s.canonicalize(0.0, true);
}

std::vector<Complex> squeezer_exponential_amplitudes(double r, int truncation) {
    if (truncation < 1) {
        throw std::invalid_argument("truncation must be at least 1");
    }
    // On span{|k, k>} the pair operator ab + a^dag b^dag is tridiagonal with
    // off-diagonal entries k + 1.
    const int dim = truncation + 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int k = 0; k + 1 < dim; k++) {
        h(k + 1, k) = k + 1;
        h(k, k + 1) = k + 1;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    const Eigen::MatrixXd &v = eig.eigenvectors();
    const Eigen::VectorXd &d = eig.eigenvalues();
    std::vector<Complex> out(dim, 0.0);
    for (int n = 0; n < dim; n++) {
        Complex acc = 0;
        for (int e = 0; e < dim; e++) {
            acc += v(n, e) * std::exp(Complex(0, -r * d(e))) * v(0, e);
        }
        out[n] = acc;
    }
    return out;
}

HeraldResult heralded_single_photon(SqueezeParam p, DetectorModel det) {
    const FockState pair = two_mode_squeezed_vacuum(p);
    const int herald_mode[1] = {1};
    HeraldResult result;
    for (auto &o : measure_modes(pair, herald_mode, det)) {
        const int reported = o.outcome[0].second;
        if (reported == 1) {
            result.herald_probability = o.probability;
            result.fidelity = o.fidelity_with(FockState::number_state({1}));
            result.outcome = std::move(o);
            break;
        }
    }
    return result;
}

}  // namespace lopt
