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

#include "lopt/measurement.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace lopt;

namespace {

FockState bell_pair() {
    return FockState::superposition(2, {{{0, 1}, 1.0}, {{1, 0}, 1.0}}).normalized();
}

double total_probability(const std::vector<ConditionalOutcome> &outcomes) {
    double p = 0;
    for (const auto &o : outcomes) {
        p += o.probability;
    }
    return p;
}

}  // namespace

TEST(measure_modes, counter_on_bell_pair) {
    const int modes[] = {0};
    auto outcomes = measure_modes(bell_pair(), modes, DetectorModel::counter());
    ASSERT_EQ(outcomes.size(), 2u);
    ASSERT_EQ(outcomes[0].counts(), std::vector<int>{0});
    ASSERT_NEAR(outcomes[0].probability, 0.5, 1e-15);
    ASSERT_EQ(outcomes[0].post_state(), FockState::number_state({1}));
    ASSERT_EQ(outcomes[1].counts(), std::vector<int>{1});
    ASSERT_NEAR(outcomes[1].probability, 0.5, 1e-15);
    ASSERT_TRUE(approx_equal(outcomes[1].post_state(), FockState::number_state({0}), 1e-15));
}

TEST(measure_modes, bucket_merges_counts) {
    auto s = tensor(FockState::number_state({2}), FockState::superposition(1, {{{0}, 0.6}, {{1}, 0.8}}));
    const int modes[] = {0};
    auto outcomes = measure_modes(s, modes, DetectorModel::bucket());
    ASSERT_EQ(outcomes.size(), 1u);
    ASSERT_EQ(outcomes[0].counts(), std::vector<int>{1});
    ASSERT_NEAR(outcomes[0].probability, 1, 1e-15);
    ASSERT_TRUE(outcomes[0].is_pure());

    auto mixed = FockState::superposition(2, {{{1, 0}, 1.0}, {{2, 1}, 1.0}, {{0, 3}, 1.0}}).normalized();
    auto merged = measure_modes(mixed, modes, DetectorModel::bucket());
    ASSERT_EQ(merged.size(), 2u);
    ASSERT_NEAR(merged[1].probability, 2.0 / 3, 1e-15);
    ASSERT_FALSE(merged[1].is_pure());
    ASSERT_THROW(merged[1].post_state(), std::logic_error);
    ASSERT_NEAR(merged[1].fidelity_with(FockState::number_state({0})), 0.5, 1e-15);
}

TEST(measure_modes, rejects_bad_modes) {
    const int dup[] = {0, 0};
    const int out_of_range[] = {2};
    ASSERT_THROW(measure_modes(bell_pair(), dup, DetectorModel::counter()), std::invalid_argument);
    ASSERT_THROW(measure_modes(bell_pair(), out_of_range, DetectorModel::counter()), std::out_of_range);
}

TEST(measure_modes, probabilities_sum_to_one) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = test_util::random_state(rng, 4, 8, 2);
        const int modes[] = {3, 1};
        for (auto model : {DetectorModel::counter(), DetectorModel::bucket(), DetectorModel::fanout_counter(3)}) {
            auto outcomes = measure_modes(s, modes, model);
            ASSERT_NEAR(total_probability(outcomes), 1, 1e-10);
            for (const auto &o : outcomes) {
                for (const auto &b : o.ensemble) {
                    ASSERT_NEAR(b.state.norm(), 1, 1e-12);
                    ASSERT_EQ(b.state.mode_count(), 2u);
                }
            }
        }
    }
}

TEST(postselect, examples) {
    const int mode0[] = {0};
    const int one[] = {1};
    auto r = postselect(FockState::number_state({1, 0}), mode0, one);
    ASSERT_TRUE(r.has_value());
    ASSERT_NEAR(r->probability, 1, 1e-15);
    ASSERT_EQ(r->post_state(), FockState::number_state({0}));

    auto half = postselect(bell_pair(), mode0, one);
    ASSERT_NEAR(half->probability, 0.5, 1e-15);

    const int two[] = {2};
    ASSERT_FALSE(postselect(bell_pair(), mode0, two).has_value());
}

TEST(postselect, matches_counter_branch) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = test_util::random_state(rng, 3, 6, 2);
        const int modes[] = {2, 0};
        for (const auto &o : measure_modes(s, modes, DetectorModel::counter())) {
            auto counts = o.counts();
            auto p = postselect(s, modes, counts);
            ASSERT_TRUE(p.has_value());
            ASSERT_NEAR(p->probability, o.probability, 1e-14);
            ASSERT_TRUE(approx_equal(p->post_state(), o.post_state(), 1e-14));
        }
    }
}

TEST(measure_modes, disjoint_measurements_commute) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = test_util::random_state(rng, 4, 8, 1);
        // Measure mode 0 then (old) mode 2, versus mode 2 then mode 0; then
        // tensor fresh vacuum back in both cases.
        const int first0[] = {0};
        const int then2[] = {1};  // old mode 2 after removing mode 0
        const int first2[] = {2};
        const int then0[] = {0};
        for (const auto &a : measure_modes(s, first0, DetectorModel::counter())) {
            for (const auto &b : measure_modes(a.post_state(), then2, DetectorModel::counter())) {
                const int c2[] = {b.counts()[0]};
                auto other = postselect(s, first2, c2);
                ASSERT_TRUE(other.has_value());
                const int c0[] = {a.counts()[0]};
                auto both = postselect(other->post_state(), then0, c0);
                ASSERT_TRUE(both.has_value());
                ASSERT_NEAR(a.probability * b.probability, other->probability * both->probability, 1e-12);
                auto lhs = tensor(b.post_state(), FockState::vacuum(2));
                auto rhs = tensor(both->post_state(), FockState::vacuum(2));
                ASSERT_TRUE(approx_equal(lhs, rhs, 1e-12));
            }
        }
    }
}

TEST(fanout_count, single_boson_never_misdetects) {
    for (int n : {1, 4, 10}) {
        auto r = fanout_count(FockState::number_state({1}), 0, n);
        ASSERT_EQ(r.outcomes.size(), 1u);
        ASSERT_EQ(r.outcomes[0].counts(), std::vector<int>{1});
        ASSERT_NEAR(r.outcomes[0].probability, 1, 1e-12);
        ASSERT_NEAR(r.misdetect_probability, 0, 1e-15);
    }
}

TEST(fanout_count, two_bosons_ten_detectors) {
    auto r = fanout_count(FockState::number_state({2}), 0, 10);
    ASSERT_NEAR(r.misdetect_probability, 0.1, 1e-12);
    ASSERT_NEAR(fanout_misdetect_exact(2, 10), 0.1, 1e-15);
}

TEST(fanout_count, three_bosons_sixteen_detectors) {
    auto r = fanout_count(FockState::number_state({3}), 0, 16);
    ASSERT_NEAR(r.misdetect_probability, 0.1796875, 1e-12);
    ASSERT_LE(r.misdetect_probability, 3.0 * 2 / 32);
}

TEST(fanout_count, matches_falling_factorial_and_bound) {
    for (int k = 0; k <= 4; ++k) {
        for (int n : {1, 2, 4, 7}) {
            auto r = fanout_count(FockState::number_state({k}), 0, n);
            ASSERT_NEAR(r.misdetect_probability, fanout_misdetect_exact(k, n), 1e-10);
            ASSERT_LE(r.misdetect_probability, k * (k - 1) / (2.0 * n) + 1e-12);
        }
    }
}

TEST(fanout_count, keeps_other_modes) {
    auto s = FockState::superposition(2, {{{1, 0}, 1.0}, {{2, 1}, 1.0}}).normalized();
    auto r = fanout_count(s, 0, 4);
    double total = 0;
    for (const auto &o : r.outcomes) {
        total += o.probability;
        for (const auto &b : o.ensemble) {
            ASSERT_EQ(b.state.mode_count(), 1u);
        }
    }
    ASSERT_NEAR(total, 1, 1e-12);
    ASSERT_NEAR(r.misdetect_probability, 0.5 * fanout_misdetect_exact(2, 4), 1e-12);
}

TEST(sample_outcome, deterministic_state) {
    const int modes[] = {0, 1};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto o = sample_outcome(FockState::number_state({1, 0}), modes, DetectorModel::counter(), seed);
        ASSERT_EQ(o.counts(), (std::vector<int>{1, 0}));
    }
}

TEST(sample_outcome, same_seed_same_outcome) {
    const int modes[] = {0};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto a = sample_outcome(bell_pair(), modes, DetectorModel::counter(), seed);
        auto b = sample_outcome(bell_pair(), modes, DetectorModel::counter(), seed);
        ASSERT_EQ(a.counts(), b.counts());
    }
}

TEST(sample_outcome, frequencies_match_probabilities) {
    const int modes[] = {0};
    auto outcomes = measure_modes(bell_pair(), modes, DetectorModel::counter());
    std::mt19937_64 rng(99);
    const int trials = 100000;
    int ones = 0;
    for (int i = 0; i < trials; ++i) {
        ones += outcomes[sample_index(outcomes, rng)].counts()[0] == 1;
    }
    const double sigma = std::sqrt(0.25 / trials);
    ASSERT_NEAR(static_cast<double>(ones) / trials, 0.5, 3 * sigma);
}
