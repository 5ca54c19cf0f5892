// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

// One line per acceptance criterion; failing checks follow with their first
// counterexample. Exit status 1 when any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>

#include "suite.hpp"

using namespace repsym::suite;

int main() {
    bool all = true;
    for (int id = 1; id <= criterion_count(); ++id) {
        auto t0 = std::chrono::steady_clock::now();
        Criterion c;
        std::string error;
        try {
            c = run_criterion(id, Options{});
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = error.empty() && c.ok();
        all = all && ok;
        std::printf("criterion %d (%s): %s  [%.2fs]\n", id, c.title.c_str(), ok ? "PASS" : "FAIL", secs);
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        for (const auto& ch : c.checks) {
            if (ch.ok) continue;
            std::printf("    %s: %s\n", ch.name.c_str(), ch.counterexample.dump().c_str());
        }
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
