// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "repsym/complex.hpp"
#include "repsym/series.hpp"

namespace repsym {

/// (a; q)_n = (1 - a)(1 - a q)...(1 - a q^{n-1}); (a; q)_0 = 1.
Series pochhammer(const Series& a, const Series& q, int n);
/// (a; q)_inf truncated. Either q has zero constant term (direct product
/// until factors truncate away) or q is a bare rational and a has zero
/// constant term (Euler's expansion sum (-1)^n q^{n(n-1)/2} a^n / (q; q)_n).
Series pochhammer_inf(const Series& a, const Series& q);
/// Euler's expansion of (b; Q)_inf for a rational Q with |Q| != 1 nowhere
/// singular: requires (Q; Q)_n != 0.
Series pochhammer_inf_euler(const Series& b, const Rational& Q);

Complex pochhammer(Complex a, Complex q, int n);
/// Throws DomainError when |q| >= 1.
Complex pochhammer_inf(Complex a, Complex q, double tol = 1e-12);

/// B_0..B_D of prod_{n>=1} (1 - q^n)^{-a_n}; a[0] holds a_1.
std::vector<Rational> euler_expand(std::span<const Rational> a, int D);
/// Exponents a_1..a_D reproducing B; requires B_0 = 1.
std::vector<Rational> euler_invert(std::span<const Rational> B, int D);

struct SpectralParams {
    double a = 1.0;
    Complex eps{0.0, 0.0};
    int ell = 1;
    Complex theta{0.0, 1.0};
};

struct RuelleResult {
    Complex value;
    Complex s;
    int factors = 0;  // number of factors multiplied before the tail bound
};

/// prod_{n>=ell} (1 - q^{a n + eps}) with q = exp(2 pi i theta), and the
/// associated s = (a ell + eps)(1 - i rho) + 1 - a.
RuelleResult ruelle_product(const SpectralParams& p, double tol = 1e-9);
/// prod_{n>=ell} (1 + q^{a n + eps}); s shifted by i sigma.
RuelleResult ruelle_plus_product(const SpectralParams& p, double tol = 1e-9);

double rho_of(Complex theta);
double sigma_of(Complex theta);

struct SpectralEntry {
    int m = 0;
    Complex finite;     // prod_{l<=r} (1 - q^{l m})^{-1}
    Complex via_ruelle; // tail / full, both from ruelle_product
    double deviation = 0.0;
};

struct SpectralReport {
    bool ok = true;
    double max_deviation = 0.0;
    int worst_m = 0;
    std::vector<SpectralEntry> entries;
    /// Largest gap between ruelle_product and an independent Pochhammer product.
    double product_deviation = 0.0;
    /// exp-form vs direct product for F and G at the given z.
    double F_deviation = 0.0;
    double G_deviation = 0.0;
    /// The s values of the two Ruelle factors agree with the closed forms.
    double s_deviation = 0.0;
};

SpectralReport check_spectral_identities(int r, int m_max, Complex theta, Complex z, double tol = 1e-9);

}  // namespace repsym
