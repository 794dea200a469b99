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

#ifndef LOPT_TESTS_TEST_UTIL_H
#define LOPT_TESTS_TEST_UTIL_H

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lopt/fock_state.h"
#include "lopt/linear_optics.h"

namespace lopt::test_util {

inline Complex random_complex(std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0, 1);
    return {g(rng), g(rng)};
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal folded back into Q.
inline Eigen::MatrixXcd random_unitary_matrix(int m, std::mt19937_64 &rng) {
    Eigen::MatrixXcd z(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            z(i, j) = random_complex(rng);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < m; ++j) {
        Complex d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

inline ModeUnitary random_unitary(int m, std::mt19937_64 &rng) {
    return ModeUnitary(random_unitary_matrix(m, rng));
}

/// Random superposition over up to `terms` occupations of `modes` modes with
/// at most `max_per_mode` photons each. Not normalized.
inline FockState random_state(std::mt19937_64 &rng, int modes, int terms, int max_per_mode) {
    std::uniform_int_distribution<int> count(0, max_per_mode);
    FockState s(modes);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> occ(modes);
        for (auto &c : occ) {
            c = count(rng);
        }
        s.add(occ, random_complex(rng));
    }
    return s;
}

/// Random normalized superposition with exactly `photons` bosons per term.
inline FockState random_fixed_photon_state(std::mt19937_64 &rng, int modes, int photons, int terms) {
    std::uniform_int_distribution<int> pick(0, modes - 1);
    FockState s(modes);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> occ(modes, 0);
        for (int p = 0; p < photons; ++p) {
            ++occ[pick(rng)];
        }
        s.add(occ, random_complex(rng));
    }
    return s.normalized();
}

/// All occupations of `modes` modes with exactly `photons` bosons.
inline std::vector<Occupation> occupations_with(int modes, int photons) {
    std::vector<Occupation> out;
    Occupation cur(modes, 0);
    auto rec = [&](auto &self, int mode, int left) -> void {
        if (mode == modes - 1) {
            cur[mode] = static_cast<std::uint8_t>(left);
            out.push_back(cur);
            return;
        }
        for (int c = left; c >= 0; --c) {
            cur[mode] = static_cast<std::uint8_t>(c);
            self(self, mode + 1, left - c);
        }
    };
    rec(rec, 0, photons);
    return out;
}

/// Random normalized qubit amplitudes.
inline std::pair<Complex, Complex> random_qubit(std::mt19937_64 &rng) {
    Complex a = random_complex(rng);
    Complex b = random_complex(rng);
    double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
}

}  // namespace lopt::test_util

#endif
