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

#include "lopt/parity.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "lopt/preparation.h"
#include "lopt/resource_states.h"
#include "test_util.h"

using namespace lopt;

namespace {

const double kRt2 = std::sqrt(2.0);

// Parity reported by each successful branch; -1 if branches disagree.
int reported_parity(const ProtocolBranches &branches) {
    int p = -2;
    for (const auto &b : branches) {
        if (!b.succeeded) {
            continue;
        }
        int v = b.parity.value_or(-1);
        if (p == -2) {
            p = v;
        } else if (p != v) {
            return -1;
        }
    }
    return p;
}

}  // namespace

TEST(parity_measure, basis_states) {
    const int expected[4] = {0, 1, 1, 0};
    const int occ[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (int n = 2; n <= 3; n++) {
        for (int i = 0; i < 4; i++) {
            auto policy = BranchPolicy::exhaustive();
            auto branches = parity_measure(FockState::number_state(occ[i]), 0, 1, n, policy);
            auto strategy = GadgetStrategy::teleported(n);
            EXPECT_NEAR(success_probability(branches), parity_success_probability(strategy, expected[i]), 1e-10);
            EXPECT_NEAR(branches[0].success_probability, parity_success_probability(strategy, expected[i]), 1e-15);
            EXPECT_NEAR(total_probability(branches), 1, 1e-10);
            EXPECT_EQ(reported_parity(branches), expected[i]) << n << " " << i;
        }
    }
}

TEST(parity_measure, success_share_of_resource_terms) {
    // Even n: n^2 / 2 of the resource terms succeed in either sector.
    EXPECT_NEAR(parity_success_probability(GadgetStrategy::teleported(2), 0), 2.0 / 5, 1e-15);
    EXPECT_NEAR(parity_success_probability(GadgetStrategy::teleported(2), 1), 2.0 / 5, 1e-15);
    EXPECT_NEAR(parity_success_probability(GadgetStrategy::teleported(4), 1), 8.0 / 13, 1e-15);
    // Odd n favours one sector; at n = 1 the even resource never passes odd inputs.
    EXPECT_NEAR(parity_success_probability(GadgetStrategy::teleported(1), 0), 0.5, 1e-15);
    EXPECT_EQ(parity_success_probability(GadgetStrategy::teleported(1), 1), 0);
    EXPECT_NEAR(parity_success_probability(GadgetStrategy::teleported(3), 0), 5.0 / 8, 1e-15);
    EXPECT_NEAR(parity_success_probability(GadgetStrategy::teleported(3), 1), 4.0 / 8, 1e-15);
    EXPECT_NEAR(parity_success_probability(GadgetStrategy::teleported(1), 1, true), 0.5, 1e-15);
    EXPECT_EQ(parity_success_probability(GadgetStrategy::ideal(), 1), 1);
}

TEST(parity_measure, order_one_even_resource_rejects_odd_inputs) {
    auto policy = BranchPolicy::exhaustive();
    auto odd = parity_measure(FockState::number_state({0, 1}), 0, 1, 1, policy);
    EXPECT_EQ(success_probability(odd), 0);
    auto via_odd = parity_measure(FockState::number_state({0, 1}), 0, 1, 1, policy, nullptr, true);
    EXPECT_NEAR(success_probability(via_odd), 0.5, 1e-12);
    EXPECT_EQ(reported_parity(via_odd), 1);
}

TEST(parity_measure, odd_sector_superposition_survives) {
    auto in = FockState::superposition(2, {{{0, 1}, 1 / kRt2}, {{1, 0}, 1 / kRt2}});
    for (int n = 2; n <= 4; n++) {
        auto policy = BranchPolicy::exhaustive();
        auto branches = parity_measure(in, 0, 1, n, policy);
        EXPECT_EQ(reported_parity(branches), 1);
        for (const auto &b : branches) {
            if (b.succeeded) {
                EXPECT_NEAR(fidelity(b.output_state, in), 1, 1e-10);
            }
        }
    }
}

TEST(parity_measure, projects_mixed_parity_input) {
    std::mt19937_64 rng(4);
    Complex a[4];
    double norm = 0;
    for (auto &x : a) {
        x = test_util::random_complex(rng);
        norm += std::norm(x);
    }
    FockState in(2);
    const int occ[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (int i = 0; i < 4; i++) {
        in.add(make_occupation(occ[i]), a[i] / std::sqrt(norm));
    }
    FockState even(2), odd(2);
    even.add(make_occupation({0, 0}), a[0]);
    even.add(make_occupation({1, 1}), a[3]);
    odd.add(make_occupation({0, 1}), a[1]);
    odd.add(make_occupation({1, 0}), a[2]);
    const double p_even = even.norm_squared() / norm;
    auto policy = BranchPolicy::exhaustive();
    auto branches = parity_measure(in, 0, 1, 2, policy);
    double seen_even = 0;
    for (const auto &b : branches) {
        if (!b.succeeded) {
            continue;
        }
        const auto &want = *b.parity == 0 ? even : odd;
        EXPECT_NEAR(fidelity(b.output_state, want.normalized()), 1, 1e-10);
        if (*b.parity == 0) {
            seen_even += b.probability;
        }
    }
    EXPECT_NEAR(seen_even / success_probability(branches), p_even, 1e-10);
}

TEST(parity_measure, odd_variant_resource_is_equally_useful) {
    auto policy = BranchPolicy::exhaustive();
    auto prep = prepare_pn_prime(2, GadgetStrategy::ideal(), policy);
    for (const auto &r : prep) {
        bool odd = *r.parity == 1;
        for (const auto *occ : {"01", "11"}) {
            const int counts[2] = {occ[0] - '0', occ[1] - '0'};
            auto branches = parity_measure(FockState::number_state(counts), 0, 1, 2, policy, &r.output_state, odd);
            EXPECT_EQ(reported_parity(branches), (counts[0] + counts[1]) % 2);
        }
    }
}

TEST(parity_measure, ideal_projector) {
    auto policy = BranchPolicy::exhaustive();
    auto in = FockState::superposition(2, {{{0, 0}, 0.6}, {{0, 1}, 0.8}});
    auto branches = ideal_parity_measure(in, 0, 1, policy);
    ASSERT_EQ(branches.size(), 2u);
    EXPECT_NEAR(branches[0].probability, 0.36, 1e-14);
    EXPECT_EQ(*branches[1].parity, 1);
    EXPECT_THROW(measure_parity(in, 0, 1, GadgetStrategy::nonlinear_sign(), policy), std::invalid_argument);
}

TEST(teleport_with_E, basis_and_phase_inputs) {
    for (auto strategy : {GadgetStrategy::ideal(), GadgetStrategy::teleported(1), GadgetStrategy::teleported(2)}) {
        for (auto in : {encode_qubit(1, 0), encode_qubit(0, 1), encode_qubit(1 / kRt2, Complex(0, 1 / kRt2))}) {
            auto policy = BranchPolicy::exhaustive();
            auto branches = teleport_with_E(in, {0, 1}, strategy, policy);
            double want = 0.5 * (parity_success_probability(strategy, 0) + parity_success_probability(strategy, 1));
            EXPECT_NEAR(success_probability(branches), want, 1e-10);
            for (const auto &b : branches) {
                if (b.succeeded) {
                    EXPECT_NEAR(fidelity(b.output_state, in), 1, 1e-10) << strategy.name();
                }
            }
        }
    }
}

TEST(teleport_with_E, random_inputs) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 10; trial++) {
        auto [a0, a1] = test_util::random_qubit(rng);
        auto in = encode_qubit(a0, a1);
        auto policy = BranchPolicy::exhaustive();
        auto branches = teleport_with_E(in, {0, 1}, GadgetStrategy::ideal(), policy);
        EXPECT_NEAR(success_probability(branches), 1, 1e-10);
        for (const auto &b : branches) {
            EXPECT_NEAR(fidelity(b.output_state, in), 1, 1e-10);
        }
    }
}

TEST(teleport_with_E, parity_class_is_input_independent) {
    // Each Bell class on (input qubit, near pair) occurs with probability 1/2
    // whatever the input.
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 5; trial++) {
        auto [a0, a1] = test_util::random_qubit(rng);
        auto policy = BranchPolicy::exhaustive();
        double odd = 0;
        for (const auto &b : teleport_with_E(encode_qubit(a0, a1), {0, 1}, GadgetStrategy::ideal(), policy)) {
            odd += *b.parity == 1 ? b.probability : 0;
        }
        EXPECT_NEAR(odd, 0.5, 1e-10);
    }
}

TEST(distribute_entanglement, accepts_half_with_one_ebit) {
    for (auto strategy : {GadgetStrategy::ideal(), GadgetStrategy::teleported(2)}) {
        auto policy = BranchPolicy::exhaustive();
        auto branches = distribute_entanglement(strategy, policy);
        EXPECT_NEAR(success_probability(branches), 0.5 * parity_success_probability(strategy, 1), 1e-10);
        const int far[2] = {2, 3};
        for (const auto &b : branches) {
            if (b.succeeded) {
                EXPECT_NEAR(entanglement_entropy_bits(b.output_state, far), 1, 1e-8);
                EXPECT_NEAR(fidelity(b.output_state, make_resource(ResourceKind::e()).state), 1, 1e-10);
                auto rho = reduced_density_matrix(b.output_state, far);
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho.rho);
                auto ev = eig.eigenvalues();
                EXPECT_NEAR(ev(ev.size() - 1), 0.5, 1e-10);
                EXPECT_NEAR(ev(ev.size() - 2), 0.5, 1e-10);
            }
        }
    }
}

TEST(distribute_entanglement, rejected_branch_is_the_bunched_pair) {
    auto policy = BranchPolicy::exhaustive();
    auto branches = distribute_entanglement(GadgetStrategy::ideal(), policy);
    ASSERT_EQ(branches.size(), 2u);
    const int far[2] = {2, 3};
    for (const auto &b : branches) {
        if (b.succeeded) {
            continue;
        }
        EXPECT_NEAR(b.probability, 0.5, 1e-12);
        auto want = FockState::superposition(4, {{{0, 0, 1, 1}, 1.0}, {{1, 1, 0, 0}, -1.0}}).normalized();
        EXPECT_NEAR(fidelity(b.output_state, want), 1, 1e-12);
        // Both photons sit on one side, so the near modes are not a dual-rail
        // qubit; across the near/far cut the branch still carries one ebit.
        EXPECT_NEAR(entanglement_entropy_bits(b.output_state, far), 1, 1e-8);
    }
}
