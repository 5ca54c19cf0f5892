// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "repsym/rational.hpp"

namespace repsym::suite {

using Json = nlohmann::ordered_json;

/// Rationals always go out as "num/den".
std::string rat(const Rational& r);

struct Check {
    std::string name;
    bool ok = true;
    long cases = 0;
    /// First failing case; null while ok.
    Json counterexample;

    /// Counts one case; on the first failure stores what `ce` returns.
    template <class F>
    void expect(bool cond, F&& ce) {
        ++cases;
        if (cond || !ok) {
            if (!cond) ok = false;
            return;
        }
        ok = false;
        counterexample = ce();
    }
};

/// Degree parameters are capped at min(D, value named by the criterion);
/// kFull leaves every cap at the named value.
constexpr int kFull = 30;

struct Options {
    int D = kFull;
    unsigned seed = 1;
    /// Flips the sign of the partition generating exponents in the Euler check.
    bool sentinel = false;
};

struct Criterion {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    bool ok() const;
};

/// Acceptance criterion 1..9.
Criterion run_criterion(int id, const Options& opts);
int criterion_count();

/// Every cross-module identity at truncation D (<= 12), without the extreme
/// tension spectrum claim.
std::vector<Check> identity_suite(const Options& opts);

Json to_json(const Check& c);

}  // namespace repsym::suite
