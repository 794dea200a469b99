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

#include <cmath>

#include "gtest/gtest.h"

using namespace lopt;

TEST(squeezed_vacuum, zero_squeezing_is_vacuum) {
    auto s = two_mode_squeezed_vacuum(squeeze(0));
    EXPECT_EQ(s.size(), 1u);
    EXPECT_NEAR(std::abs(s.amplitude({0, 0})), 1, 1e-15);
}

TEST(squeezed_vacuum, ratio_and_pairing) {
    for (double r : {0.05, 0.1, 0.3, 0.5, 1.0}) {
        auto s = two_mode_squeezed_vacuum(squeeze(r));
        EXPECT_NEAR(s.norm(), 1, 1e-14);
        for (const auto &[occ, amp] : s.terms()) {
            EXPECT_EQ(occ[0], occ[1]);
            EXPECT_GT(amp.real(), 0);
            EXPECT_EQ(amp.imag(), 0);
        }
        EXPECT_NEAR(s.amplitude({1, 1}).real() / s.amplitude({0, 0}).real(), std::tanh(r), 1e-14);
        EXPECT_NEAR(s.amplitude({3, 3}).real() / s.amplitude({2, 2}).real(), std::tanh(r), 1e-14);
    }
    auto s = two_mode_squeezed_vacuum(squeeze(0.1));
    EXPECT_NEAR(s.amplitude({1, 1}).real() / s.amplitude({0, 0}).real(), 0.0997, 1e-4);
}

TEST(squeezed_vacuum, cutoff_enforces_tail) {
    for (double r : {0.01, 0.1, 0.5, 1.0, 1.5}) {
        int c = required_cutoff(r);
        EXPECT_LE(truncation_tail(r, c), kSqueezeTail);
        if (c > 1) {
            EXPECT_GT(truncation_tail(r, c - 1), kSqueezeTail);
        }
    }
    EXPECT_THROW(two_mode_squeezed_vacuum({0.5, 3}), InsufficientCutoffError);
    EXPECT_THROW(required_cutoff(3.0), InsufficientCutoffError);
    EXPECT_THROW(two_mode_squeezed_vacuum({-0.1, 3}), std::invalid_argument);
}

TEST(squeezed_vacuum, exponential_oracle_matches_closed_form) {
    for (double r : {0.05, 0.1, 0.3, 0.5}) {
        for (int cutoff : {12, 20}) {
            auto oracle = squeezer_exponential_amplitudes(r, std::max(2 * cutoff, 40));
            const double t = std::tanh(r);
            Complex phase = 1;
            for (int n = 0; n <= cutoff; n++) {
                Complex closed = phase * std::pow(t, n) / std::cosh(r);
                EXPECT_NEAR(std::abs(oracle[n] - closed), 0, 1e-8) << r << " " << n;
                phase *= Complex(0, -1);
            }
        }
    }
}

TEST(heralding, counter_gives_single_photon) {
    for (double r : {0.05, 0.3, 0.8}) {
        auto h = heralded_single_photon(squeeze(r), DetectorModel::counter());
        ASSERT_TRUE(h.outcome);
        EXPECT_NEAR(h.fidelity, 1, 1e-12);
        EXPECT_TRUE(h.outcome->is_pure());
    }
}

TEST(heralding, bucket_fidelity_closed_form) {
    auto h = heralded_single_photon(squeeze(0.1), DetectorModel::bucket());
    EXPECT_NEAR(h.fidelity, 1 / std::pow(std::cosh(0.1), 2), 1e-10);
    EXPECT_NEAR(h.fidelity, 0.990, 1e-3);
    EXPECT_NEAR(h.herald_probability, std::pow(std::tanh(0.1), 2), 1e-10);
}

TEST(heralding, bucket_improves_with_weaker_squeezing) {
    double last_fidelity = 0;
    double last_herald = 2;
    for (double r : {0.5, 0.3, 0.1, 0.05}) {
        auto h = heralded_single_photon(squeeze(r), DetectorModel::bucket());
        EXPECT_GT(h.fidelity, last_fidelity);
        EXPECT_LT(h.fidelity, 1);
        EXPECT_LT(h.herald_probability, last_herald);
        last_fidelity = h.fidelity;
        last_herald = h.herald_probability;
    }
    EXPECT_GT(heralded_single_photon(squeeze(1e-4), DetectorModel::bucket()).fidelity, 1 - 1e-7);
}

TEST(heralding, zero_squeezing_never_heralds) {
    auto h = heralded_single_photon(squeeze(0), DetectorModel::bucket());
    EXPECT_EQ(h.herald_probability, 0);
    EXPECT_FALSE(h.outcome);
}

TEST(heralding, fanout_between_bucket_and_counter) {
    auto bucket = heralded_single_photon(squeeze(0.3), DetectorModel::bucket());
    auto fan = heralded_single_photon(squeeze(0.3), DetectorModel::fanout_counter(8));
    EXPECT_GT(fan.fidelity, bucket.fidelity);
    EXPECT_LT(fan.fidelity, 1);
}
