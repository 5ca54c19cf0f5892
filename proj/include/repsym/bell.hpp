// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "repsym/error.hpp"
#include "repsym/partitions.hpp"
#include "repsym/rational.hpp"
#include "repsym/series.hpp"

namespace repsym {

// Complete Bell polynomials Y_n(g_1, ..., g_n). T is Rational or Series;
// g[0] holds g_1.

template <class T>
T bell_recurrence(int n, std::span<const T> g) {
    if (n < 0) throw UsageError("bell: n must be non-negative");
    if (static_cast<int>(g.size()) < n)
        throw UsageError("bell: need " + std::to_string(n) + " arguments, got " + std::to_string(g.size()));
    std::vector<T> y;
    y.reserve(static_cast<std::size_t>(n) + 1);
    y.push_back(T(1));
    for (int m = 0; m < n; ++m) {
        T next(0);
        for (int k = 0; k <= m; ++k) next += binomial(m, k) * (y[m - k] * g[k]);
        y.push_back(std::move(next));
    }
    return y[n];
}

/// Sum over multiplicity vectors, i.e. over partitions of n.
template <class T>
T bell_faa_di_bruno(int n, std::span<const T> g) {
    if (n < 0) throw UsageError("bell: n must be non-negative");
    if (static_cast<int>(g.size()) < n)
        throw UsageError("bell: need " + std::to_string(n) + " arguments, got " + std::to_string(g.size()));
    T total(0);
    for (const auto& lam : enumerate_partitions(n)) {
        Rational c = factorial(n);
        T term(1);
        for (int j = 1; j <= n; ++j) {
            int k = lam.multiplicity(j);
            if (k == 0) continue;
            c /= factorial(k);
            T base = g[j - 1] * factorial(j).inverse();
            for (int r = 0; r < k; ++r) term = term * base;
        }
        total += c * term;
    }
    return total;
}

/// Partial Bell polynomial B_{n,j}: the part of Y_n homogeneous of degree j.
template <class T>
T bell_partial(int n, int j, std::span<const T> g) {
    T total(0);
    for (const auto& lam : enumerate_partitions(n)) {
        if (lam.length() != j) continue;
        Rational c = factorial(n);
        T term(1);
        for (int i = 1; i <= n; ++i) {
            int k = lam.multiplicity(i);
            if (k == 0) continue;
            c /= factorial(k);
            T base = g[i - 1] * factorial(i).inverse();
            for (int r = 0; r < k; ++r) term = term * base;
        }
        total += c * term;
    }
    return total;
}

struct BellGeneratingReport {
    bool ok = true;
    /// Y_0..Y_D from the recurrence.
    std::vector<Rational> y;
    /// Coefficients of exp(sum g_n z^n / n!) times n!.
    std::vector<Rational> from_exp;
    int first_mismatch = -1;
};

/// Compares exp(sum_{n<=D} g_n z^n/n!) with sum Y_n z^n/n! up to z^D.
BellGeneratingReport bell_generating_check(std::span<const Rational> g, int D);

}  // namespace repsym
