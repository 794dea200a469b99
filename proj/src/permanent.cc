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

#include "lopt/permanent.h"

#include <bit>
#include <cmath>
#include <cstdint>

namespace lopt {

Complex permanent(const Eigen::MatrixXcd &a) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n) {
        throw std::invalid_argument("permanent of a non-square matrix");
    }
    if (n == 0) {
        return 1.0;
    }
    if (n > 30) {
        throw std::invalid_argument("permanent size too large for exact summation");
    }
    // Ryser: perm(A) = (-1)^n sum_S (-1)^{|S|} prod_i sum_{j in S} a_ij,
    // visiting subsets in Gray-code order so each step toggles one column.
    Eigen::VectorXcd row_sums = Eigen::VectorXcd::Zero(n);
    Complex total = 0;
    std::uint64_t gray = 0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        std::uint64_t next = k ^ (k >> 1);
        std::uint64_t diff = next ^ gray;
        int col = std::countr_zero(diff);
        if (next & diff) {
            row_sums += a.col(col);
        } else {
            row_sums -= a.col(col);
        }
        gray = next;
        Complex prod = 1;
        for (int i = 0; i < n; ++i) {
            prod *= row_sums(i);
        }
        total += (std::popcount(gray) % 2 == 1) ? -prod : prod;
    }
    return (n % 2 == 1) ? -total : total;
}

Complex transition_amplitude_permanent(const ModeUnitary &u, const Occupation &in, const Occupation &out) {
    const auto m = static_cast<std::size_t>(u.dimension());
    if (in.size() != m || out.size() != m) {
        throw ModeMismatchError("occupation length differs from unitary dimension");
    }
    std::vector<int> rows;
    std::vector<int> cols;
    double norm = 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (int r = 0; r < out[i]; ++r) {
            rows.push_back(static_cast<int>(i));
        }
        for (int c = 0; c < in[i]; ++c) {
            cols.push_back(static_cast<int>(i));
        }
        norm *= std::tgamma(in[i] + 1.0) * std::tgamma(out[i] + 1.0);
    }
    if (rows.size() != cols.size()) {
        return 0.0;
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd sub(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            sub(r, c) = u(rows[r], cols[c]);
        }
    }
    return permanent(sub) / std::sqrt(norm);
}

}  // namespace lopt
