// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "repsym/qspectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "repsym/error.hpp"

namespace repsym {

Series pochhammer(const Series& a, const Series& q, int n) {
    if (n < 0) throw UsageError("pochhammer: n must be >= 0");
    Series out(1);
    Series qk(1);
    for (int k = 0; k < n; ++k) {
        out *= Series(1) - a * qk;
        qk *= q;
    }
    return out;
}

Series pochhammer_inf_euler(const Series& b, const Rational& Q) {
    if (!b.constant_term().is_zero()) throw UsageError("pochhammer_inf: a needs zero constant term");
    if (b.is_scalar()) return Series(1);
    const int T = b.ring()->max_total_degree();
    Series out = Series::constant(b.ring(), 1);
    Series bn = Series::constant(b.ring(), 1);
    Rational qq(1);  // (Q; Q)_n
    for (int n = 1; n <= T; ++n) {
        bn *= b;
        if (bn.is_zero()) break;
        qq *= Rational(1) - Q.pow(n);
        if (qq.is_zero()) throw DomainError("pochhammer_inf: Q is a root of unity");
        Rational c = Q.pow(static_cast<long>(n) * (n - 1) / 2) / qq;
        out += bn * (n % 2 ? -c : c);
    }
    return out;
}

Series pochhammer_inf(const Series& a, const Series& q) {
    if (q.is_scalar()) return pochhammer_inf_euler(a, q.constant_term());
    if (!q.constant_term().is_zero())
        throw UsageError("pochhammer_inf: q must have zero constant term or be a rational scalar");
    Series out = Series::constant(q.ring(), 1);
    Series term = a;
    term += Series::zero(q.ring());
    while (!term.is_zero()) {
        out *= Series(1) - term;
        term *= q;
    }
    return out;
}

Complex pochhammer(Complex a, Complex q, int n) {
    if (n < 0) throw UsageError("pochhammer: n must be >= 0");
    Complex out(1.0, 0.0), term = a;
    for (int k = 0; k < n; ++k) {
        out *= 1.0 - term;
        term *= q;
    }
    return out;
}

Complex pochhammer_inf(Complex a, Complex q, double tol) {
    double aq = std::abs(q);
    if (!(aq < 1.0)) throw DomainError("pochhammer_inf: |q| >= 1");
    Complex out(1.0, 0.0), term = a;
    for (int k = 0; k < 1000000; ++k) {
        double t = std::abs(term);
        if (t < 0.5 && 2.0 * t / (1.0 - aq) < tol) return out;
        out *= 1.0 - term;
        term *= q;
    }
    throw DomainError("pochhammer_inf: product did not converge");
}

std::vector<Rational> euler_expand(std::span<const Rational> a, int D) {
    if (D < 0) throw UsageError("euler_expand: D must be >= 0");
    if (static_cast<int>(a.size()) < D) throw UsageError("euler_expand: need D exponents");
    // D_j = sum_{d | j} d a_d.
    std::vector<Rational> dj(static_cast<std::size_t>(D) + 1, Rational(0));
    for (int d = 1; d <= D; ++d)
        for (int j = d; j <= D; j += d) dj[j] += Rational(d) * a[d - 1];
    std::vector<Rational> B(static_cast<std::size_t>(D) + 1, Rational(0));
    B[0] = Rational(1);
    for (int n = 1; n <= D; ++n) {
        Rational s(0);
        for (int j = 1; j <= n; ++j) s += dj[j] * B[n - j];
        B[n] = s / Rational(n);
    }
    return B;
}

std::vector<Rational> euler_invert(std::span<const Rational> B, int D) {
    if (D < 0) throw UsageError("euler_invert: D must be >= 0");
    if (static_cast<int>(B.size()) < D + 1) throw UsageError("euler_invert: need B_0..B_D");
    if (!B[0].is_one()) throw UsageError("euler_invert: B_0 must be 1");
    std::vector<Rational> dj(static_cast<std::size_t>(D) + 1, Rational(0));
    for (int n = 1; n <= D; ++n) {
        Rational s = Rational(n) * B[n];
        for (int j = 1; j < n; ++j) s -= dj[j] * B[n - j];
        dj[n] = s;
    }
    std::vector<Rational> a(static_cast<std::size_t>(D), Rational(0));
    for (int n = 1; n <= D; ++n) {
        Rational s = dj[n];
        for (int d = 1; d < n; ++d)
            if (n % d == 0) s -= Rational(d) * a[d - 1];
        a[n - 1] = s / Rational(n);
    }
    return a;
}

double rho_of(Complex theta) { return theta.real() / theta.imag(); }
double sigma_of(Complex theta) { return 1.0 / (2.0 * theta.imag()); }

namespace {

RuelleResult ruelle_impl(const SpectralParams& p, double tol, double sign) {
    if (!(p.theta.imag() > 0.0)) throw DomainError("ruelle: Im theta must be positive");
    if (!(p.a > 0.0)) throw DomainError("ruelle: a must be positive");
    if (p.ell < 0) throw UsageError("ruelle: ell must be non-negative");
    const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
    double ratio = std::exp(-2.0 * std::numbers::pi * p.a * p.theta.imag());
    if (!(ratio < 1.0)) throw DomainError("ruelle: |q^a| >= 1");
    RuelleResult res;
    res.value = Complex(1.0, 0.0);
    for (long n = p.ell;; ++n) {
        Complex w = std::exp(two_pi_i * p.theta * (p.a * static_cast<double>(n) + p.eps));
        double t = std::abs(w);
        if (t < 0.5 && 2.0 * t / (1.0 - ratio) < tol) break;
        if (res.factors > 10000000) throw DomainError("ruelle: product did not converge");
        res.value *= 1.0 + sign * w;
        ++res.factors;
    }
    double rho = rho_of(p.theta);
    res.s = (p.a * p.ell + p.eps) * Complex(1.0, -rho) + 1.0 - p.a;
    return res;
}

}  // namespace

RuelleResult ruelle_product(const SpectralParams& p, double tol) { return ruelle_impl(p, tol, -1.0); }

RuelleResult ruelle_plus_product(const SpectralParams& p, double tol) {
    RuelleResult r = ruelle_impl(p, tol, 1.0);
    r.s += Complex(0.0, sigma_of(p.theta));
    return r;
}

SpectralReport check_spectral_identities(int r, int m_max, Complex theta, Complex z, double tol) {
    if (r < 1 || m_max < 1) throw UsageError("spectral check: r and m_max must be >= 1");
    if (!(std::abs(z) < 1.0)) throw DomainError("spectral check: need |z| < 1");
    const double inner = std::min(tol * 1e-3, 1e-13);
    const Complex q = std::exp(Complex(0.0, 2.0 * std::numbers::pi) * theta);
    const double rho = rho_of(theta);
    SpectralReport rep;
    auto ratio_at = [&](int m, SpectralReport* out) {
        SpectralParams all{static_cast<double>(m), {0.0, 0.0}, 1, theta};
        SpectralParams tail{static_cast<double>(m), {0.0, 0.0}, r + 1, theta};
        RuelleResult ra = ruelle_product(all, inner), rt = ruelle_product(tail, inner);
        if (out) {
            Complex qm = std::pow(q, m);
            out->product_deviation = std::max(
                {out->product_deviation, std::abs(ra.value - pochhammer_inf(qm, qm, inner)),
                 std::abs(rt.value - pochhammer_inf(std::pow(qm, r + 1), qm, inner))});
            Complex s_all(1.0, -m * rho), s_tail(m * r + 1.0, -m * rho * (r + 1));
            out->s_deviation = std::max({out->s_deviation, std::abs(ra.s - s_all), std::abs(rt.s - s_tail)});
        }
        return rt.value / ra.value;
    };
    for (int m = 1; m <= m_max; ++m) {
        SpectralEntry e;
        e.m = m;
        e.finite = Complex(1.0, 0.0);
        for (int l = 1; l <= r; ++l) e.finite /= 1.0 - std::pow(q, l * m);
        e.via_ruelle = ratio_at(m, &rep);
        e.deviation = std::abs(e.finite - e.via_ruelle) / std::max(1.0, std::abs(e.finite));
        if (e.deviation > rep.max_deviation) {
            rep.max_deviation = e.deviation;
            rep.worst_m = m;
        }
        rep.entries.push_back(e);
    }
    // exp(+-sum (+-z)^m/m * ratio_m) against the direct product over k >= 0
    // with weight sum_l l k_l, the zero index included.
    Complex logF(0.0, 0.0), logG(0.0, 0.0);
    for (int m = 1; m < 100000; ++m) {
        Complex ratio = ratio_at(m, nullptr);
        Complex zm = std::pow(z, m);
        logF += zm / static_cast<double>(m) * ratio;
        logG -= std::pow(-z, m) / static_cast<double>(m) * ratio;
        if (std::abs(zm) * std::abs(ratio) / m < inner) break;
    }
    // c[w]: number of k with sum l k_l = w, i.e. partitions of w into parts <= r.
    constexpr int kMaxWeight = 20000;
    std::vector<double> c(kMaxWeight + 1, 0.0);
    c[0] = 1.0;
    for (int part = 1; part <= r; ++part)
        for (int s = part; s <= kMaxWeight; ++s) c[s] += c[s - part];
    Complex F(1.0, 0.0), G(1.0, 0.0);
    for (int w = 0; w <= kMaxWeight; ++w) {
        Complex t = z * std::pow(q, w);
        if (w > 0 && std::abs(t) * c[w] * 2.0 / (1.0 - std::abs(q)) < inner) break;
        F *= std::pow(1.0 - t, -c[w]);
        G *= std::pow(1.0 + t, c[w]);
    }
    rep.F_deviation = std::abs(std::exp(logF) - F) / std::max(1.0, std::abs(F));
    rep.G_deviation = std::abs(std::exp(logG) - G) / std::max(1.0, std::abs(G));
    double worst = std::max({rep.max_deviation, rep.product_deviation, rep.F_deviation, rep.G_deviation,
                             rep.s_deviation});
    rep.ok = worst < tol;
    return rep;
}

}  // namespace repsym
