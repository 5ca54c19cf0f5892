// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "repsym/bell.hpp"

namespace repsym {

BellGeneratingReport bell_generating_check(std::span<const Rational> g, int D) {
    if (D < 0) throw UsageError("bell: D must be non-negative");
    if (static_cast<int>(g.size()) < D) throw UsageError("bell: need at least D arguments");
    auto ring = SeriesRing::make({"z"}, D);
    Series log_b = Series::zero(ring);
    for (int n = 1; n <= D; ++n) log_b += Series::power_of(ring, "z", n, g[n - 1] / factorial(n));
    Series b = log_b.exp();
    BellGeneratingReport rep;
    for (int n = 0; n <= D; ++n) {
        rep.y.push_back(bell_recurrence<Rational>(n, g));
        rep.from_exp.push_back(b.coefficient({n}) * factorial(n));
        if (rep.y.back() != rep.from_exp.back() && rep.ok) {
            rep.ok = false;
            rep.first_mismatch = n;
        }
    }
    return rep;
}

}  // namespace repsym
