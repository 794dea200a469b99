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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "lopt/resource_states.h"
#include "test_util.h"

using namespace lopt;

namespace {

const double kRt2 = std::sqrt(2.0);

FockState random_qubit_state(std::mt19937_64 &rng) {
    auto [a0, a1] = test_util::random_qubit(rng);
    return encode_qubit(a0, a1);
}

FockState random_two_qubit_state(std::mt19937_64 &rng) {
    std::vector<Complex> amps(4);
    double norm = 0;
    for (auto &a : amps) {
        a = test_util::random_complex(rng);
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return encode_qubits(amps);
}

}  // namespace

TEST(resource_states, closed_forms) {
    auto t1 = make_resource(ResourceKind::tn(1)).state;
    EXPECT_NEAR(fidelity(t1, FockState::superposition(2, {{{0, 1}, 1.0}, {{1, 0}, 1.0}}).normalized()), 1, 1e-15);
    auto b4 = make_resource(ResourceKind::b4_prime()).state;
    EXPECT_EQ(b4.size(), 4u);
    EXPECT_NEAR(b4.amplitude({0, 1, 0, 1}).real(), -0.5, 1e-15);
    auto tp1 = make_resource(ResourceKind::tn_prime(1)).state;
    int negative = 0;
    for (const auto &[occ, amp] : tp1.terms()) {
        negative += amp.real() < 0;
    }
    EXPECT_EQ(negative, 1);
    EXPECT_NEAR(tp1.amplitude({0, 1, 0, 1}).real(), -0.5, 1e-15);
    EXPECT_NEAR(fidelity(tp1, b4), 1, 1e-15);
    EXPECT_THROW(make_resource(ResourceKind::tn(0)), std::invalid_argument);
}

TEST(resource_states, term_counts_and_norms) {
    for (int n = 1; n <= 4; n++) {
        auto tn = make_resource(ResourceKind::tn(n));
        EXPECT_EQ(tn.state.size(), static_cast<std::size_t>(n + 1));
        EXPECT_NEAR(tn.state.norm(), 1, 1e-14);
        EXPECT_EQ(tn.modes("first").size(), static_cast<std::size_t>(n));
        auto tpr = make_resource(ResourceKind::tn_prime(n));
        EXPECT_EQ(tpr.state.size(), static_cast<std::size_t>((n + 1) * (n + 1)));
        EXPECT_NEAR(tpr.state.norm(), 1, 1e-14);
        auto tp = make_resource(ResourceKind::tp(n));
        EXPECT_EQ(tp.state.size(), static_cast<std::size_t>(n + 1));
        EXPECT_EQ(tp.state.mode_count(), static_cast<std::size_t>(2 * n + 2));
        auto pe = make_resource(ResourceKind::pn_prime(n));
        auto po = make_resource(ResourceKind::pn_prime(n, true));
        EXPECT_EQ(pe.state.size() + po.state.size(), static_cast<std::size_t>((n + 1) * (n + 1)));
        EXPECT_NEAR(pe.state.norm(), 1, 1e-14);
        EXPECT_NEAR(po.state.norm(), 1, 1e-14);
        for (const auto &[occ, amp] : tn.state.terms()) {
            EXPECT_EQ(total_photons(occ), n);
        }
    }
    auto e = make_resource(ResourceKind::e()).state;
    EXPECT_NEAR(e.amplitude({1, 0, 0, 1}).real(), -1 / kRt2, 1e-15);
}

TEST(resource_states, unary_terms) {
    EXPECT_EQ(unary_term(3, 0), make_occupation({0, 0, 0, 1, 1, 1}));
    EXPECT_EQ(unary_term(3, 2), make_occupation({1, 1, 0, 0, 0, 1}));
    EXPECT_EQ(unary_term(3, 3), make_occupation({1, 1, 1, 0, 0, 0}));
}

TEST(bm1, bell_input_gives_plus) {
    auto policy = BranchPolicy::exhaustive();
    auto bell = FockState::superposition(2, {{{0, 1}, 1.0}, {{1, 0}, 1.0}}).normalized();
    auto outcomes = bm1_measure(bell, 0, 1, policy);
    ASSERT_EQ(outcomes.size(), 1u);
    EXPECT_EQ(outcomes[0].parity, 1);
    EXPECT_EQ(outcomes[0].sign, 1);
    EXPECT_NEAR(outcomes[0].probability, 1, 1e-14);
}

TEST(bm1, vacuum_is_even) {
    auto policy = BranchPolicy::exhaustive();
    auto outcomes = bm1_measure(FockState::vacuum(2), 0, 1, policy);
    ASSERT_EQ(outcomes.size(), 1u);
    EXPECT_EQ(outcomes[0].parity, 0);
    EXPECT_EQ(outcomes[0].sign, 0);
}

TEST(teleport_bm1, half_success_and_perfect_output) {
    std::mt19937_64 rng(77);
    auto policy = BranchPolicy::exhaustive();
    for (int trial = 0; trial < 20; trial++) {
        auto in = random_qubit_state(rng);
        auto branches = teleport_bm1(in, 0, policy);
        EXPECT_NEAR(success_probability(branches), 0.5, 1e-12);
        EXPECT_NEAR(total_probability(branches), 1, 1e-12);
        for (const auto &b : branches) {
            if (b.succeeded) {
                EXPECT_NEAR(fidelity(b.output_state, in), 1, 1e-10);
            } else {
                ASSERT_TRUE(b.failure);
                EXPECT_EQ(b.failure->kind, FailureKind::BasisProjection);
                EXPECT_EQ(b.failure->mode, 0);
            }
        }
    }
}

TEST(teleport_tn, n1_matches_bm1_failure_rate) {
    std::mt19937_64 rng(8);
    auto policy = BranchPolicy::exhaustive();
    auto in = random_qubit_state(rng);
    EXPECT_NEAR(1 - success_probability(teleport_tn(in, 0, 1, policy)), 0.5, 1e-12);
}

TEST(teleport_tn, failure_rate_and_fidelity) {
    std::mt19937_64 rng(31);
    auto policy = BranchPolicy::exhaustive();
    for (int n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 4; trial++) {
            auto in = random_qubit_state(rng);
            auto branches = teleport_tn(in, 0, n, policy);
            EXPECT_NEAR(1 - success_probability(branches), 1.0 / (n + 1), 1e-10) << n;
            EXPECT_NEAR(total_probability(branches), 1, 1e-10);
            for (const auto &b : branches) {
                ASSERT_EQ(b.output_state.mode_count(), 2u);
                if (b.succeeded) {
                    EXPECT_NEAR(fidelity(b.output_state, in), 1, 1e-10) << n;
                }
            }
        }
    }
}

TEST(teleport_tn, failures_are_basis_projections) {
    auto policy = BranchPolicy::exhaustive();
    const int n = 3;
    auto in = encode_qubit(0.6, 0.8);
    double projected[2] = {0, 0};
    for (const auto &b : teleport_tn(in, 0, n, policy)) {
        if (b.succeeded) {
            continue;
        }
        ASSERT_TRUE(b.failure);
        EXPECT_EQ(b.failure->kind, FailureKind::BasisProjection);
        // The teleported mode is measured: 0 photons means qubit |0>, 1 means |1>.
        const int want_b = b.failure->projected_value == 0 ? 1 : 0;
        EXPECT_NEAR(std::abs(b.output_state.amplitude({0, want_b})), 1, 1e-12);
        projected[b.failure->projected_value] += b.probability;
    }
    EXPECT_NEAR(projected[0], 0.36 / (n + 1), 1e-12);
    EXPECT_NEAR(projected[1], 0.64 / (n + 1), 1e-12);
}

TEST(teleport_tn, leftover_modes_hold_unary_pattern) {
    auto policy = BranchPolicy::exhaustive();
    const int n = 4;
    for (const auto &b : teleport_tn(encode_qubit(0.6, 0.8), 0, n, policy)) {
        if (!b.succeeded) {
            continue;
        }
        int k = 0;
        for (auto [mode, count] : b.detections) {
            k += count;
        }
        ASSERT_EQ(b.leftover.size(), static_cast<std::size_t>(2 * n));
        for (int slot = 1; slot <= 2 * n; slot++) {
            int want = slot > n + k ? 1 : 0;
            EXPECT_EQ(b.leftover[slot - 1], want) << "k=" << k << " slot=" << slot;
        }
    }
}

TEST(teleport_tn, inside_larger_register) {
    std::mt19937_64 rng(9);
    auto policy = BranchPolicy::exhaustive();
    auto in = random_two_qubit_state(rng);
    for (int mode : {0, 2}) {
        auto branches = teleport_tn(in, mode, 2, policy);
        EXPECT_NEAR(success_probability(branches), 2.0 / 3, 1e-10);
        for (const auto &b : branches) {
            if (b.succeeded) {
                EXPECT_NEAR(fidelity(b.output_state, in), 1, 1e-10);
            }
        }
    }
}

TEST(fourier_correction, angle_values) {
    const int none[3] = {1, 0, 0};
    EXPECT_EQ(fourier_correction_angle(none), 0);
    const int one[3] = {0, 1, 0};
    EXPECT_NEAR(fourier_correction_angle(one), 2 * std::numbers::pi / 3, 1e-14);
}

TEST(csign_teleported, success_probabilities) {
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 2; n++) {
        auto policy = BranchPolicy::exhaustive();
        auto in = random_two_qubit_state(rng);
        auto branches = csign_teleported(in, {0, 1}, {2, 3}, n, policy);
        double q = n / (n + 1.0);
        EXPECT_NEAR(success_probability(branches), q * q, 1e-10);
        EXPECT_NEAR(total_probability(branches), 1, 1e-10);
        auto want = ideal_mode_csign(in, 0, 2);
        for (const auto &b : branches) {
            if (b.succeeded) {
                EXPECT_NEAR(fidelity(b.output_state, want), 1, 1e-10);
            }
        }
    }
}

TEST(csign_teleported, flips_one_one) {
    auto policy = BranchPolicy::exhaustive();
    auto in = FockState::number_state({1, 0, 1, 0});
    auto branches = coalesce(csign_teleported(in, {0, 1}, {2, 3}, 1, policy));
    for (const auto &b : branches) {
        if (b.succeeded) {
            EXPECT_NEAR(std::abs(b.output_state.amplitude({1, 0, 1, 0}) + 1.0), 0, 1e-10);
        }
    }
}

TEST(csign_teleported, detected_failures_keep_other_qubit) {
    std::mt19937_64 rng(22);
    for (int n = 1; n <= 2; n++) {
        auto policy = BranchPolicy::exhaustive();
        auto in = random_two_qubit_state(rng);
        const int q1[2] = {0, 1};
        const int q2[2] = {2, 3};
        auto before_q2 = reduced_density_matrix(in, q2);
        for (const auto &b : csign_teleported(in, {0, 1}, {2, 3}, n, policy)) {
            if (b.succeeded) {
                continue;
            }
            ASSERT_TRUE(b.failure);
            EXPECT_EQ(b.failure->kind, FailureKind::BasisProjection);
            if (b.failure->stage == "csign first") {
                // First qubit projected: the second qubit's reduced state is untouched
                // once conditioned on the known outcome.
                auto after = reduced_density_matrix(b.output_state, q2);
                ASSERT_EQ(after.basis, before_q2.basis);
                // Condition the input on the projected value of qubit 1.
                int v = b.failure->projected_value;
                std::vector<Complex> amps = qubit_amplitudes(in, std::vector<BosonicQubit>{{0, 1}, {2, 3}});
                std::vector<Complex> cond{amps[2 * v], amps[2 * v + 1]};
                double norm = std::norm(cond[0]) + std::norm(cond[1]);
                auto q2_state = encode_qubit(cond[0] / std::sqrt(norm), cond[1] / std::sqrt(norm));
                const int both[2] = {0, 1};
                auto want = reduced_density_matrix(q2_state, both);
                EXPECT_LT((after.rho - want.rho).cwiseAbs().maxCoeff(), 1e-10);
            } else {
                // Second qubit projected to v: first qubit restored by the recorded phase.
                int v = b.failure->projected_value;
                std::vector<Complex> amps = qubit_amplitudes(in, std::vector<BosonicQubit>{{0, 1}, {2, 3}});
                Complex c0 = amps[v], c1 = amps[2 + v];
                double norm = std::norm(c0) + std::norm(c1);
                auto q1_state = encode_qubit(c0 / std::sqrt(norm), c1 / std::sqrt(norm));
                auto after = reduced_density_matrix(b.output_state, q1);
                const int both[2] = {0, 1};
                auto want = reduced_density_matrix(q1_state, both);
                EXPECT_LT((after.rho - want.rho).cwiseAbs().maxCoeff(), 1e-10);
            }
        }
    }
}

TEST(csign_teleported, sampled_policy_is_deterministic) {
    auto in = FockState::number_state({1, 0, 1, 0});
    auto p1 = BranchPolicy::sampled(99);
    auto p2 = BranchPolicy::sampled(99);
    for (int i = 0; i < 20; i++) {
        auto a = csign_teleported(in, {0, 1}, {2, 3}, 2, p1);
        auto b = csign_teleported(in, {0, 1}, {2, 3}, 2, p2);
        ASSERT_EQ(a.size(), 1u);
        ASSERT_EQ(b.size(), 1u);
        EXPECT_EQ(a[0].succeeded, b[0].succeeded);
        EXPECT_EQ(a[0].detections, b[0].detections);
    }
}
