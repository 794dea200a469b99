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

#include "lopt/verify.h"

#include "gtest/gtest.h"

using namespace lopt;

TEST(verify, suites_cover_every_criterion) {
    auto all = suite_criteria("all");
    ASSERT_EQ(all.size(), 14u);
    std::vector<int> seen;
    for (const auto &s : suite_names()) {
        if (s == "all") {
            continue;
        }
        for (int id : suite_criteria(s)) {
            seen.push_back(id);
        }
    }
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen, all);
    EXPECT_THROW(suite_criteria("everything"), std::invalid_argument);
    EXPECT_THROW(run_criterion(15), std::invalid_argument);
}

TEST(verify, fast_criteria_pass_and_report) {
    for (int id : {1, 2, 4, 11}) {
        auto r = run_criterion(id);
        EXPECT_TRUE(r.passed) << format_line(r);
        EXPECT_LE(r.worst_error, r.tolerance);
        EXPECT_EQ(format_line(r).rfind("PASS", 0), 0u);
    }
}

TEST(verify, tolerance_override_is_honoured) {
    VerifyOptions opts;
    opts.tol = 1e-300;
    auto r = run_criterion(11, opts);
    EXPECT_FALSE(r.passed);
    EXPECT_FALSE(r.detail.empty());
    EXPECT_EQ(format_line(r).rfind("FAIL", 0), 0u);
}
