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

// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <cstdio>
#include <thread>

#include "lopt/verify.h"

int main() {
    lopt::VerifyOptions opts;
    opts.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    int failed = 0;
    for (int id : lopt::suite_criteria("all")) {
        auto r = lopt::run_criterion(id, opts);
        std::printf("%s\n", lopt::format_line(r).c_str());
        std::fflush(stdout);
        failed += !r.passed;
    }
    std::printf("%d of 14 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
