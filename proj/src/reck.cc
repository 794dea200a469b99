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

#include "lopt/reck.h"

#include <cmath>

namespace lopt {

namespace {

constexpr double kNegligibleAngle = 1e-14;

double wrap_angle(double a) {
    a = std::remainder(a, 2 * std::numbers::pi);
    return a <= -std::numbers::pi ? a + 2 * std::numbers::pi : a;
}

}  // namespace

ElementSequence decompose_reck(const ModeUnitary &u) {
    const int m = u.dimension();
    Eigen::MatrixXcd w = u.matrix();

    // Each nulling step is w <- B(theta) P(phi) w on rows (i-1, i).
    struct Step {
        int upper;
        double phi;
        double theta;
    };
    std::vector<Step> steps;
    for (int c = 0; c + 1 < m; ++c) {
        for (int i = m - 1; i > c; --i) {
            Complex a = w(i - 1, c);
            Complex b = w(i, c);
            if (std::abs(b) < 1e-300) {
                continue;
            }
            double phi = std::abs(a) > 0 ? wrap_angle(std::arg(b) - std::arg(a)) : 0.0;
            w.row(i - 1) *= std::polar(1.0, phi);
            double theta = std::atan2(-std::abs(b), std::abs(w(i - 1, c)));
            double cs = std::cos(theta);
            double sn = std::sin(theta);
            Eigen::RowVectorXcd upper = w.row(i - 1);
            Eigen::RowVectorXcd lower = w.row(i);
            w.row(i - 1) = cs * upper - sn * lower;
            w.row(i) = sn * upper + cs * lower;
            w(i, c) = 0;
            steps.push_back({i - 1, phi, theta});
        }
    }

    ElementSequence seq;
    seq.mode_count = m;
    for (int j = 0; j < m; ++j) {
        double phase = wrap_angle(std::arg(w(j, j)));
        if (std::abs(phase) > kNegligibleAngle) {
            seq.elements.push_back(OpticalElement::phase_shifter(j, phase));
        }
    }
    // u = T_1^dagger ... T_K^dagger D, and T^dagger = P(-phi) B(-theta).
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (std::abs(it->theta) > kNegligibleAngle) {
            seq.elements.push_back(OpticalElement::beam_splitter(it->upper, it->upper + 1, -it->theta));
        }
        if (std::abs(it->phi) > kNegligibleAngle) {
            seq.elements.push_back(OpticalElement::phase_shifter(it->upper, -it->phi));
        }
    }
    return seq;
}

}  // namespace lopt
