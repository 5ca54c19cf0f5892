// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "repsym/string2n.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "repsym/error.hpp"

namespace repsym {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex I{0.0, 1.0};

Matrix2 mul(const Matrix2& l, const Matrix2& r) {
    Matrix2 o{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) o[i][j] = l[i][0] * r[0][j] + l[i][1] * r[1][j];
    return o;
}

}  // namespace

StringConfig StringConfig::make(double x, int N) {
    if (!(x > 0.0) || !std::isfinite(x)) throw UsageError("string: tension ratio x must be positive");
    if (N < 1) throw UsageError("string: N must be >= 1");
    return {x, N};
}

TransferMatrix omega_matrix(double eps, double p) {
    Complex e = std::exp(-I * p);
    return {e - eps * eps, eps * (e - 1.0)};
}

TransferMatrix m2N(double eps, double p, int N) {
    if (N < 0) throw UsageError("m2N: N must be >= 0");
    TransferMatrix out{1.0, 0.0}, base = omega_matrix(eps, p);
    for (int n = N; n > 0; n >>= 1) {
        if (n & 1) out = out * base;
        base = base * base;
    }
    return out;
}

FactorProduct junction_product(double eps, double p, int N) {
    if (N < 1) throw UsageError("junction_product: N must be >= 1");
    Matrix2 prod{{{1.0, 0.0}, {0.0, 1.0}}};
    for (int j = 1; j <= 2 * N - 1; ++j) {
        double s = j % 2 == 0 ? eps : -eps;
        Matrix2 f{{{1.0, s * std::exp(-I * (j * p))}, {s * std::exp(I * (j * p)), 1.0}}};
        prod = mul(prod, f);
    }
    Complex em = std::exp(-I * (N * p)), ep = std::exp(I * (N * p));
    prod = mul(prod, Matrix2{{{em, eps * em}, {eps * ep, ep}}});
    TransferMatrix w = m2N(eps, p, N);
    Matrix2 ref{{{w.a, w.b}, {w.c(), w.d()}}};
    FactorProduct out{prod, 0.0};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.deviation = std::max(out.deviation, std::abs(prod[i][j] - ref[i][j]));
    return out;
}

double dispersion(const StringConfig& cfg, double omega) {
    double p = kPi * omega / cfg.N;
    TransferMatrix M = m2N(cfg.epsilon(), p, cfg.N).scaled(std::pow(cfg.scale(), cfg.N));
    return std::norm(M.a - 1.0) - std::norm(M.b);
}

double dispersion_stable(const StringConfig& cfg, double omega) {
    double eps = cfg.epsilon();
    double p = kPi * omega / cfg.N;
    double s = std::sin(p / 2.0) / std::sqrt(1.0 - eps * eps);
    if (std::abs(s) <= 1.0) {
        double v = std::sin(cfg.N * std::asin(s));
        return 4.0 * v * v;
    }
    double sign = cfg.N % 2 == 0 ? 1.0 : -1.0;
    return 2.0 - 2.0 * sign * std::cosh(2.0 * cfg.N * std::acosh(std::abs(s)));
}

namespace {

using Fn = std::function<double(double)>;

double bisect_root(const Fn& f, double lo, double hi, double flo) {
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo)); ++it) {
        double mid = 0.5 * (lo + hi), fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Minimum of |f| on [lo, hi] where f keeps sign `sg` near the extremum.
double bisect_extremum(const Fn& f, double lo, double hi, double sg) {
    const double h = 1e-7;
    auto slope = [&](double w) { return sg * (f(w + h) - f(w - h)); };
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo)); ++it) {
        double mid = 0.5 * (lo + hi);
        if (slope(mid) > 0) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> eigenfrequencies(const StringConfig& cfg, double omega_max, int count, const RootOptions& opts) {
    if (!(omega_max > 0.0)) throw UsageError("eigenfrequencies: omega_max must be positive");
    if (!(opts.step > 0.0)) throw UsageError("eigenfrequencies: scan step must be positive");
    Fn f = opts.route == DispersionRoute::stable ? Fn([&](double w) { return dispersion_stable(cfg, w); })
                                                 : Fn([&](double w) { return dispersion(cfg, w); });
    const long n = static_cast<long>(std::ceil(omega_max / opts.step)) + 1;
    std::vector<double> grid(static_cast<std::size_t>(n) + 1), val(grid.size());
    for (long i = 0; i <= n; ++i) {
        grid[i] = static_cast<double>(i) * opts.step;
        val[i] = f(grid[i]);
    }
    // exact zeros count as non-negative, so crossings next to them are bisected
    auto neg = [](double v) { return v < 0; };
    std::vector<double> roots;
    for (long i = 1; i <= n; ++i) {
        if (neg(val[i - 1]) != neg(val[i])) roots.push_back(bisect_root(f, grid[i - 1], grid[i], val[i - 1]));
        if (i == n) break;
        double a = std::abs(val[i]);
        if (a > std::abs(val[i - 1]) || a > std::abs(val[i + 1])) continue;
        bool same = neg(val[i - 1]) == neg(val[i]) && neg(val[i + 1]) == neg(val[i]);
        if (!same) {
            // touching zero between crossings: only the grid point itself is resolved
            if (a <= opts.zero_tol) roots.push_back(grid[i]);
            continue;
        }
        double sg = neg(val[i]) ? -1.0 : 1.0;
        double w = bisect_extremum(f, grid[i - 1], grid[i + 1], sg);
        double fw = f(w);
        if (std::abs(fw) <= opts.zero_tol) {
            roots.push_back(w);
        } else if (neg(fw) != neg(val[i])) {
            // two simple roots closer than the scan step
            roots.push_back(bisect_root(f, grid[i - 1], w, val[i - 1]));
            roots.push_back(bisect_root(f, w, grid[i + 1], fw));
        }
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots) {
        if (r <= 1e-9 || r > omega_max * (1 + 1e-12)) continue;
        if (!out.empty() && r - out.back() <= 1e-7 * std::max(1.0, r)) continue;
        out.push_back(r);
        if (count > 0 && static_cast<int>(out.size()) == count) break;
    }
    return out;
}

std::pair<Complex, Complex> omega_eigenvalues(double eps, double p) {
    double T = 2.0 * std::cos(p) - 2.0 * eps * eps;
    double D = (1.0 - eps * eps) * (1.0 - eps * eps);
    Complex disc = std::sqrt(Complex(T * T - 4.0 * D, 0.0));
    Complex l1 = 0.5 * (T + disc), l2 = 0.5 * (T - disc);
    if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
    return {l1, l2};
}

}  // namespace repsym
