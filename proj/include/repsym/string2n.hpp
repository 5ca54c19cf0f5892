// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "repsym/complex.hpp"

namespace repsym {

/// Piecewise uniform string of 2N alternating pieces with tension ratio x and
/// total length pi.
struct StringConfig {
    double x = 1.0;
    int N = 1;

    /// Throws UsageError unless x > 0 and N >= 1. Values x > 1 are accepted;
    /// they give epsilon < 0.
    static StringConfig make(double x, int N);
    double epsilon() const { return (1.0 - x) / (1.0 + x); }
    /// (1+x)^2 / 4x, equal to 1/(1 - epsilon^2).
    double scale() const { return (1.0 + x) * (1.0 + x) / (4.0 * x); }
};

/// (a, b; conj(b), conj(a)); the shape survives products.
struct TransferMatrix {
    Complex a, b;

    Complex c() const { return std::conj(b); }
    Complex d() const { return std::conj(a); }
    /// |a|^2 - |b|^2, written as Re((a - b) conj(a + b)) to keep precision
    /// when both moduli are close.
    double det() const { return ((a - b) * std::conj(a + b)).real(); }
    double trace() const { return 2.0 * a.real(); }
    friend TransferMatrix operator*(const TransferMatrix& l, const TransferMatrix& r) {
        return {l.a * r.a + l.b * r.c(), l.a * r.b + l.b * r.d()};
    }
    TransferMatrix scaled(double s) const { return {a * s, b * s}; }
};

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

TransferMatrix omega_matrix(double eps, double p);
/// Omega^N by repeated squaring.
TransferMatrix m2N(double eps, double p, int N);

/// Product of the junction factors m^(1) ... m^(2N-1) m'_(2N) and its largest
/// entrywise distance from Omega^N.
struct FactorProduct {
    Matrix2 product{};
    double deviation = 0.0;
};
FactorProduct junction_product(double eps, double p, int N);

/// det(M - I) = |A - 1|^2 - |B|^2 with M = scale^N Omega^N at p = pi omega / N.
double dispersion(const StringConfig& cfg, double omega);
/// The same function through tr M = 2 T_N(1 - 2 s^2), s = sin(p/2)/sqrt(1 - eps^2):
/// 4 sin^2(N asin s) for |s| <= 1, 2 - 2 (-1)^N cosh(2N acosh|s|) otherwise.
double dispersion_stable(const StringConfig& cfg, double omega);

enum class DispersionRoute { stable, matrix };

struct RootOptions {
    double step = 0.01;
    /// Local minima of |f| at or below this count as (double) roots.
    double zero_tol = 1e-9;
    DispersionRoute route = DispersionRoute::stable;
};

/// Roots in (0, omega_max], ascending, at most `count` of them (count <= 0: all).
/// Sign changes on the scan grid are bisected; local minima of |f| are refined
/// by bisecting a central-difference derivative.
std::vector<double> eigenfrequencies(const StringConfig& cfg, double omega_max, int count = 0,
                                     const RootOptions& opts = {});

/// Eigenvalues of Omega(eps, p), larger modulus first.
std::pair<Complex, Complex> omega_eigenvalues(double eps, double p);

}  // namespace repsym
